use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field of a ring: the rationals or a prime field `F_p` with `p < 2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if !(2..1 << 16).contains(&p) || !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not a prime below 2^16")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rational => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Mod { value: n.rem_euclid(p as i64) as u32, modulus: p },
        }
    }

    /// Maps a rational number into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        match *self {
            Field::Rational => Ok(Coeff::Rat(q.clone())),
            Field::Prime(p) => {
                let modp = |n: &BigInt| -> u32 { n.mod_floor(&BigInt::from(p)).to_u32().expect("reduced mod p") };
                let num = modp(q.numer());
                let den = modp(q.denom());
                if den == 0 {
                    return Err(Error::invalid(format!("denominator of {q} vanishes mod {p}")));
                }
                let den_inv = Coeff::Mod { value: den, modulus: p }.inverse().expect("nonzero");
                Ok(&Coeff::Mod { value: num, modulus: p } * &den_inv)
            }
        }
    }

    /// All elements of a prime field, in increasing order.
    pub fn elements(&self) -> Option<Vec<Coeff>> {
        match *self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p).map(|v| Coeff::Mod { value: v, modulus: p }).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a prime field or of the rationals.
///
/// Prime-field values are stored reduced into `[0, p)`; rationals are kept in
/// lowest terms with positive denominator (guaranteed by `BigRational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Mod { value: u32, modulus: u32 },
    Rat(BigRational),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Mod { value, .. } => *value == 0,
            Coeff::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Mod { value, .. } => *value == 1,
            Coeff::Rat(q) => q.is_one(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coeff::Mod { modulus, .. } => Field::Prime(*modulus),
            Coeff::Rat(_) => Field::Rational,
        }
    }

    pub fn inverse(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coeff::Mod { value, modulus } => {
                Coeff::Mod { value: pow_mod(*value, (*modulus - 2) as u64, *modulus), modulus: *modulus }
            }
            Coeff::Rat(q) => Coeff::Rat(q.recip()),
        })
    }

    pub fn pow(&self, mut n: u64) -> Coeff {
        match self {
            Coeff::Mod { value, modulus } => Coeff::Mod { value: pow_mod(*value, n, *modulus), modulus: *modulus },
            Coeff::Rat(q) => {
                let mut acc = BigRational::one();
                let mut base = q.clone();
                while n > 0 {
                    if n & 1 == 1 {
                        acc *= &base;
                    }
                    base = &base * &base;
                    n >>= 1;
                }
                Coeff::Rat(acc)
            }
        }
    }

    /// Prime-field residue as an integer, if this is a prime-field element.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Coeff::Mod { value, .. } => Some(*value),
            Coeff::Rat(_) => None,
        }
    }

    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Mod { .. } => false,
            Coeff::Rat(q) => q.is_negative(),
        }
    }
}

fn pow_mod(base: u32, mut exp: u64, m: u32) -> u32 {
    let m = m as u64;
    let mut b = base as u64 % m;
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

fn same_field(a: &Coeff, b: &Coeff) -> u32 {
    match (a, b) {
        (Coeff::Mod { modulus: p, .. }, Coeff::Mod { modulus: q, .. }) if p == q => *p,
        _ => panic!("coefficient field mismatch: {a:?} vs {b:?}"),
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a + b),
            _ => {
                let p = same_field(self, rhs);
                let (a, b) = (self.residue().unwrap(), rhs.residue().unwrap());
                Coeff::Mod { value: ((a as u64 + b as u64) % p as u64) as u32, modulus: p }
            }
        }
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self + &(-rhs)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat(a * b),
            _ => {
                let p = same_field(self, rhs);
                let (a, b) = (self.residue().unwrap(), rhs.residue().unwrap());
                Coeff::Mod { value: ((a as u64 * b as u64) % p as u64) as u32, modulus: p }
            }
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod { value, modulus } => Coeff::Mod { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Mod { value, .. } => write!(f, "{value}"),
            Coeff::Rat(q) => write!(f, "{q}"),
        }
    }
}
