//! Exact integer characteristic polynomials of the adjacency, Laplacian
//! and signless-Laplacian matrices, the spectral invariant bundle, and the
//! Sturm-based eigenvalue queries.

use crate::graph::Graph;
use crate::poly::{self, IntPoly, RootInterval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Which matrix a spectrum belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    /// Adjacency matrix.
    A,
    /// Laplacian, degree minus adjacency.
    L,
    /// Signless Laplacian, degree plus adjacency.
    Q,
}

impl MatrixKind {
    pub fn letter(self) -> char {
        match self {
            MatrixKind::A => 'A',
            MatrixKind::L => 'L',
            MatrixKind::Q => 'Q',
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(MatrixKind::A),
            "L" | "l" => Ok(MatrixKind::L),
            "Q" | "q" => Ok(MatrixKind::Q),
            other => Err(format!("unknown matrix kind {other:?}, expected A, L or Q")),
        }
    }
}

/// Monic integer characteristic polynomial `det(xI - M)`, degree equal to
/// the graph order, exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    pub kind: MatrixKind,
    poly: IntPoly,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    /// Coefficients ascending, constant term first; leading term is 1.
    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn as_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        self.poly.eval_rat(x)
    }

    /// Canonical text form: comma-separated decimal coefficients, constant
    /// term first.
    pub fn to_coeff_text(&self) -> String {
        self.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn from_coeff_text(kind: MatrixKind, text: &str) -> Result<CharPoly, String> {
        let coeffs: Result<Vec<BigInt>, String> = text
            .split(',')
            .map(|t| t.trim().parse::<BigInt>().map_err(|e| e.to_string()))
            .collect();
        Ok(CharPoly {
            kind,
            poly: IntPoly::new(coeffs?),
        })
    }

    /// All real roots isolated to disjoint rational brackets, ascending,
    /// with multiplicities.
    pub fn isolated_roots(&self) -> Vec<RootInterval> {
        poly::isolate_real_roots(&self.poly)
    }

    /// Multiplicity of the zero eigenvalue: trailing zero coefficients.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs()
            .iter()
            .take_while(|c| c.is_zero())
            .count()
            .min(self.degree())
    }

    /// Absolute value of the lowest nonzero coefficient: the product of the
    /// nonzero eigenvalues (1 for the zero-degree polynomial).
    pub fn nonzero_eigenvalue_product(&self) -> BigInt {
        self.coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.abs())
            .unwrap_or_else(BigInt::one)
    }

    /// Determinant of the underlying matrix: `(-1)^n` times the constant
    /// term.
    pub fn determinant(&self) -> BigInt {
        let c0 = self.poly.coeff(0);
        if self.degree() % 2 == 1 {
            -c0
        } else {
            c0
        }
    }
}

/// Exact number of roots `>= threshold`, counted with multiplicity, by
/// Sturm counting on the squarefree factors. No floating point.
pub fn count_roots_geq(p: &CharPoly, threshold: &BigRational) -> usize {
    poly::count_roots_geq(p.as_poly(), threshold)
}

/// The characteristic polynomial of the chosen matrix, computed by the
/// Faddeev-LeVerrier recurrence over big integers: every division by the
/// step index is exact.
pub fn charpoly(g: &Graph, kind: MatrixKind) -> CharPoly {
    let n = g.order();
    let a = matrix_of(g, kind);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = identity(n);
    for k in 1..=n {
        let am = mat_mul(&a, &m);
        let tr = trace(&am);
        let ck = -tr / BigInt::from(k as u64);
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &ck;
        }
        coeffs[n - k] = ck;
    }
    let poly = IntPoly::new(coeffs);
    debug_assert_eq!(poly.degree(), n);
    debug_assert!(poly.leading().is_one());
    CharPoly { kind, poly }
}

/// True iff the two graphs have identical spectra for the chosen matrix,
/// i.e. identical characteristic polynomials coefficient by coefficient.
pub fn is_cospectral(g: &Graph, h: &Graph, kind: MatrixKind) -> bool {
    if g.order() != h.order() {
        return false;
    }
    charpoly(g, kind) == charpoly(h, kind)
}

/// Power sums of the signless-Laplacian eigenvalues up to the cube,
/// computed as traces of exact integer matrix powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerSums {
    pub t0: u64,
    pub t1: u64,
    pub t2: u64,
    pub t3: u64,
}

impl PowerSums {
    pub fn as_array(&self) -> [u64; 4] {
        [self.t0, self.t1, self.t2, self.t3]
    }
}

pub fn power_sums(g: &Graph) -> PowerSums {
    let q = matrix_of(g, MatrixKind::Q);
    let q2 = mat_mul(&q, &q);
    let q3 = mat_mul(&q2, &q);
    let to_u64 = |b: BigInt| u64::try_from(b).expect("trace of a nonnegative matrix power");
    PowerSums {
        t0: g.order() as u64,
        t1: to_u64(trace(&q)),
        t2: to_u64(trace(&q2)),
        t3: to_u64(trace(&q3)),
    }
}

/// The spectral invariant bundle around the signless Laplacian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QInvariants {
    pub n: usize,
    pub m: usize,
    pub power_sums: PowerSums,
    /// Determinant of the signless Laplacian.
    pub det_q: BigInt,
    /// Product of the nonzero signless-Laplacian eigenvalues.
    pub p_q: BigInt,
    /// Product of the nonzero Laplacian eigenvalues.
    pub p_l: BigInt,
    /// Multiplicity of the zero signless-Laplacian eigenvalue.
    pub zero_mult_q: usize,
    /// Spanning-tree count; present only for connected graphs.
    pub spanning_trees: Option<BigInt>,
}

pub fn q_invariants(g: &Graph) -> QInvariants {
    let qp = charpoly(g, MatrixKind::Q);
    let lp = charpoly(g, MatrixKind::L);
    QInvariants {
        n: g.order(),
        m: g.size(),
        power_sums: power_sums(g),
        det_q: qp.determinant(),
        p_q: qp.nonzero_eigenvalue_product(),
        p_l: lp.nonzero_eigenvalue_product(),
        zero_mult_q: qp.zero_multiplicity(),
        spanning_trees: spanning_tree_count(g),
    }
}

/// Spanning-tree count of a connected graph by the matrix-tree theorem:
/// determinant of the Laplacian with the last row and column deleted,
/// computed by fraction-free Bareiss elimination. `None` when disconnected.
pub fn spanning_tree_count(g: &Graph) -> Option<BigInt> {
    if g.order() == 0 || !g.is_connected() {
        return None;
    }
    let n = g.order();
    let l = matrix_of(g, MatrixKind::L);
    let mut minor: Vec<Vec<BigInt>> = (0..n - 1)
        .map(|i| (0..n - 1).map(|j| l[i][j].clone()).collect())
        .collect();
    Some(bareiss_determinant(&mut minor))
}

/// Fraction-free determinant; consumes the matrix buffer.
fn bareiss_determinant(a: &mut [Vec<BigInt>]) -> BigInt {
    let k = a.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for r in 0..k {
        if a[r][r].is_zero() {
            let Some(swap) = (r + 1..k).find(|&i| !a[i][r].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(r, swap);
            sign = -sign;
        }
        for i in r + 1..k {
            for j in r + 1..k {
                let num = &a[i][j] * &a[r][r] - &a[i][r] * &a[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                a[i][j] = num / &prev;
            }
            a[i][r] = BigInt::zero();
        }
        prev = a[r][r].clone();
    }
    a[k - 1][k - 1].clone() * sign
}

fn matrix_of(g: &Graph, kind: MatrixKind) -> Vec<Vec<BigInt>> {
    let n = g.order();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for j in g.neighbors(i) {
            row[j] = match kind {
                MatrixKind::A | MatrixKind::Q => BigInt::one(),
                MatrixKind::L => -BigInt::one(),
            };
        }
        if kind != MatrixKind::A {
            row[i] = BigInt::from(g.degree(i) as u64);
        }
    }
    m
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn trace(a: &[Vec<BigInt>]) -> BigInt {
    a.iter()
        .enumerate()
        .map(|(i, row)| row[i].clone())
        .sum()
}
