//! Linear algebra over `F_p`: subspaces in reduced row echelon form.

use std::cmp::Ordering;

pub type Vector = Vec<u32>;

fn inv(a: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// `v += c·w` in place.
pub(crate) fn axpy(v: &mut [u32], c: u32, w: &[u32], p: u32) {
    if c == 0 {
        return;
    }
    for (a, b) in v.iter_mut().zip(w) {
        *a = ((*a as u64 + c as u64 * *b as u64) % p as u64) as u32;
    }
}

pub(crate) fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&a| a == 0)
}

/// A subspace of `F_p^n`, stored by its reduced row echelon basis. Equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    p: u32,
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn zero(n: usize, p: u32) -> Subspace {
        Subspace { n, p, rows: Vec::new() }
    }

    pub fn full(n: usize, p: u32) -> Subspace {
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { n, p, rows }
    }

    pub fn span<I: IntoIterator<Item = Vector>>(n: usize, p: u32, vectors: I) -> Subspace {
        let mut s = Subspace::zero(n, p);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    fn pivot(row: &[u32]) -> usize {
        row.iter().position(|&a| a != 0).expect("nonzero row")
    }

    /// The remainder of `v` after clearing every pivot column; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[u32]) -> Vector {
        let mut v = v.to_vec();
        for row in &self.rows {
            let c = v[Self::pivot(row)];
            if c != 0 {
                axpy(&mut v, self.p - c, row, self.p);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span, keeping reduced row echelon form. Returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut r = self.reduce(&v);
        if is_zero(&r) {
            return false;
        }
        let pc = Self::pivot(&r);
        let scale = inv(r[pc], self.p);
        for a in r.iter_mut() {
            *a = ((*a as u64 * scale as u64) % self.p as u64) as u32;
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                axpy(row, self.p - c, &r, self.p);
            }
        }
        let at = self.rows.iter().position(|row| Self::pivot(row) > pc).unwrap_or(self.rows.len());
        self.rows.insert(at, r);
        true
    }

    pub fn is_subset(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let images: Vec<Vector> = self.rows.iter().map(|r| other.reduce(r)).collect();
        let combos = kernel(&images, self.n, self.p);
        Subspace::span(
            self.n,
            self.p,
            combos.into_iter().map(|c| {
                let mut v = vec![0; self.n];
                for (coef, row) in c.iter().zip(&self.rows) {
                    axpy(&mut v, *coef, row, self.p);
                }
                v
            }),
        )
    }

    /// `{v | M v ∈ self}` where `columns[i]` is the image of the `i`-th unit vector.
    pub fn preimage(&self, columns: &[Vector]) -> Subspace {
        let images: Vec<Vector> = columns.iter().map(|c| self.reduce(c)).collect();
        Subspace::span(columns.len(), self.p, kernel(&images, self.n, self.p))
    }

    /// `M(self)` for the map with the given columns.
    pub fn image(&self, columns: &[Vector]) -> Subspace {
        let out = columns.first().map(|c| c.len()).unwrap_or(0);
        Subspace::span(out, self.p, self.rows.iter().map(|r| apply(columns, r, self.p)))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by dimension first, then by echelon rows.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim().cmp(&other.dim()).then_with(|| self.rows.cmp(&other.rows))
    }
}

/// `M v` for the map with the given columns.
pub fn apply(columns: &[Vector], v: &[u32], p: u32) -> Vector {
    let out = columns.first().map(|c| c.len()).unwrap_or(0);
    let mut acc = vec![0; out];
    for (c, col) in v.iter().zip(columns) {
        axpy(&mut acc, *c, col, p);
    }
    acc
}

/// Composition `A ∘ B` of maps given by columns.
pub fn compose(a: &[Vector], b: &[Vector], p: u32) -> Vec<Vector> {
    b.iter().map(|col| apply(a, col, p)).collect()
}

/// Basis of the null space of the map with the given columns (each of length `rows`).
pub fn kernel(columns: &[Vector], rows: usize, p: u32) -> Vec<Vector> {
    let k = columns.len();
    // row-reduce the rows × k matrix
    let mut m: Vec<Vec<u32>> = (0..rows).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(src) = (r..rows).find(|&i| m[i][col] != 0) else { continue };
        m.swap(r, src);
        let s = inv(m[r][col], p);
        for a in m[r].iter_mut() {
            *a = ((*a as u64 * s as u64) % p as u64) as u32;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = p - row[col];
                axpy(row, c, &pivot_row, p);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; k];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[i][f]) % p;
            }
            v
        })
        .collect()
}
