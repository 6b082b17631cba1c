//! The 24 Fischer-projection operators of a tetrahedral stereocentre.
//!
//! Each operator is a 4×4 permutation matrix acting on the column vector of
//! the four bond slots. The twelve rotations (determinant +1) carry a
//! projection into another projection of the same enantiomer; the twelve
//! inversions (determinant −1) interchange bond pairs and land in the mirror
//! image. Together they form a faithful representation of the symmetric
//! group on four letters, the rotations being its alternating subgroup.
//!
//! All group computations are carried out on exact integers. Spectral data is
//! computed in [`Cyclotomic12`], so eigen-equations are checked without any
//! tolerance.

use std::fmt;
use std::str::FromStr;

use crate::cyclotomic::Cyclotomic12;
use crate::error::{ChiralError, Result};

pub type PermMatrix = [[u8; 4]; 4];

const fn m(rows: [[u8; 4]; 4]) -> PermMatrix {
    rows
}

/// Rotations χ1..χ12, (+)-enantiomer projections.
const ROTATIONS: [PermMatrix; 12] = [
    m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
    m([[0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0]]),
    m([[0, 0, 0, 1], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0]]),
    m([[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1]]),
    m([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    m([[0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 0, 0]]),
    m([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]),
    m([[0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0]]),
    m([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]]),
    m([[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]]),
    m([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
    m([[0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
];

/// Inversions χ̄1..χ̄12, (−)-enantiomer projections.
const INVERSIONS: [PermMatrix; 12] = [
    m([[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]]),
    m([[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]]),
    m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    m([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]),
    m([[0, 1, 0, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 1, 0]]),
    m([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
    m([[0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0]]),
    m([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]]),
    m([[0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0]]),
    m([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]),
    m([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
    m([[0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0], [1, 0, 0, 0]]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Rotation,
    Inversion,
}

impl Kind {
    pub fn from_determinant(det: i64) -> Result<Self> {
        match det {
            1 => Ok(Kind::Rotation),
            -1 => Ok(Kind::Inversion),
            d => Err(ChiralError::Invariant(format!("determinant {d} is not ±1"))),
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Kind::Rotation => 1,
            Kind::Inversion => -1,
        }
    }

    fn prefix(self) -> char {
        match self {
            Kind::Rotation => 'R',
            Kind::Inversion => 'I',
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Rotation => f.write_str("rotation"),
            Kind::Inversion => f.write_str("inversion"),
        }
    }
}

/// Identifier of one of the 24 operators, printed as `R1..R12` / `I1..I12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorId {
    pub kind: Kind,
    pub index: u8,
}

impl OperatorId {
    pub fn new(kind: Kind, index: u8) -> Result<Self> {
        if !(1..=12).contains(&index) {
            return Err(ChiralError::Argument(format!("operator index {index} not in 1..=12")));
        }
        Ok(Self { kind, index })
    }

    /// Position in the canonical ordering R1..R12, I1..I12.
    pub fn ordinal(self) -> usize {
        let base = match self.kind {
            Kind::Rotation => 0,
            Kind::Inversion => 12,
        };
        base + self.index as usize - 1
    }

    pub fn from_ordinal(ordinal: usize) -> Self {
        assert!(ordinal < 24, "ordinal {ordinal} out of range");
        let kind = if ordinal < 12 { Kind::Rotation } else { Kind::Inversion };
        Self { kind, index: (ordinal % 12 + 1) as u8 }
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.index)
    }
}

impl FromStr for OperatorId {
    type Err = ChiralError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || ChiralError::Argument(format!("not an operator identifier: {s:?}"));
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('R') => Kind::Rotation,
            Some('I') => Kind::Inversion,
            _ => return Err(bad()),
        };
        let index: u8 = chars.as_str().parse().map_err(|_| bad())?;
        OperatorId::new(kind, index)
    }
}

/// A labelled Fischer-projection operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Operator {
    id: OperatorId,
    matrix: PermMatrix,
}

impl Operator {
    pub fn new(kind: Kind, index: u8) -> Result<Self> {
        let id = OperatorId::new(kind, index)?;
        Ok(Self::from_id(id))
    }

    pub fn from_id(id: OperatorId) -> Self {
        let table = match id.kind {
            Kind::Rotation => &ROTATIONS,
            Kind::Inversion => &INVERSIONS,
        };
        Self { id, matrix: table[id.index as usize - 1] }
    }

    pub fn rotation(index: u8) -> Result<Self> {
        Self::new(Kind::Rotation, index)
    }

    pub fn inversion(index: u8) -> Result<Self> {
        Self::new(Kind::Inversion, index)
    }

    pub fn identity() -> Self {
        Self::from_id(OperatorId { kind: Kind::Rotation, index: 1 })
    }

    /// The designated mirror χ̄1, swapping slots 1 and 4.
    pub fn mirror() -> Self {
        Self::from_id(OperatorId { kind: Kind::Inversion, index: 1 })
    }

    /// All 24 operators in canonical order.
    pub fn all() -> impl Iterator<Item = Operator> {
        (0..24).map(|o| Self::from_id(OperatorId::from_ordinal(o)))
    }

    pub fn rotations() -> impl Iterator<Item = Operator> {
        Self::all().filter(|op| op.kind() == Kind::Rotation)
    }

    pub fn inversions() -> impl Iterator<Item = Operator> {
        Self::all().filter(|op| op.kind() == Kind::Inversion)
    }

    /// Looks a matrix up among the 24 tabulated operators.
    pub fn from_matrix(matrix: &PermMatrix) -> Option<Self> {
        Self::all().find(|op| &op.matrix == matrix)
    }

    pub fn id(&self) -> OperatorId {
        self.id
    }

    pub fn kind(&self) -> Kind {
        self.id.kind
    }

    pub fn index(&self) -> u8 {
        self.id.index
    }

    pub fn matrix(&self) -> &PermMatrix {
        &self.matrix
    }

    /// `images()[i]` is the source slot whose content lands in slot `i`.
    pub fn images(&self) -> [usize; 4] {
        let mut out = [0usize; 4];
        for (i, row) in self.matrix.iter().enumerate() {
            out[i] = row.iter().position(|&x| x == 1).expect("permutation matrix row");
        }
        out
    }

    /// Acts on a column vector: `result[i] = Σ_j M[i][j]·v[j]`.
    pub fn apply<T: Clone>(&self, v: &[T; 4]) -> [T; 4] {
        let img = self.images();
        [v[img[0]].clone(), v[img[1]].clone(), v[img[2]].clone(), v[img[3]].clone()]
    }

    /// Matrix product `self · rhs`; `rhs` acts first on a column vector.
    pub fn compose(&self, rhs: &Operator) -> Operator {
        let product = mat_mul(&self.matrix, &rhs.matrix);
        Self::from_matrix(&product)
            .expect("product of two tabulated permutation matrices is tabulated")
    }

    pub fn inverse(&self) -> Operator {
        let mut t = [[0u8; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                t[i][j] = self.matrix[j][i];
            }
        }
        Self::from_matrix(&t).expect("transpose of a permutation matrix is tabulated")
    }

    /// Determinant by cofactor expansion on the integer matrix.
    pub fn determinant(&self) -> i64 {
        let rows: Vec<Vec<i64>> =
            self.matrix.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        cofactor_det(&rows)
    }

    /// Disjoint cycles of the slot permutation, each starting at its smallest
    /// slot; cycles ordered by that slot. Fixed points are 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let img = self.images();
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = img[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = img[cur];
            }
            out.push(cycle);
        }
        out
    }

    pub fn char_poly(&self) -> CharPoly {
        CharPoly::of(self)
    }

    pub fn eigenvalues(&self) -> EigenSet {
        EigenSet::of(self)
    }

    pub fn eigenpairs(&self) -> Vec<Eigenpair> {
        eigenpairs(self)
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)
    }
}

fn mat_mul(a: &PermMatrix, b: &PermMatrix) -> PermMatrix {
    let mut out = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn cofactor_det(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    if n == 1 {
        return rows[0][0];
    }
    (0..n)
        .filter(|&j| rows[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i64>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * rows[0][j] * cofactor_det(&minor)
        })
        .sum()
}

/// Integer polynomial helpers, coefficients stored low degree first.
mod poly {
    pub fn trim(mut p: Vec<i64>) -> Vec<i64> {
        while p.len() > 1 && *p.last().unwrap() == 0 {
            p.pop();
        }
        p
    }

    pub fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] += y;
        }
        trim(out)
    }

    /// Exact division by a monic (up to sign) divisor; `None` if it leaves a remainder.
    pub fn div_exact(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
        let lead = *den.last().unwrap();
        debug_assert!(lead == 1 || lead == -1);
        let mut rem = num.to_vec();
        if rem.len() < den.len() {
            return None;
        }
        let mut quot = vec![0; rem.len() - den.len() + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + den.len() - 1] * lead;
            quot[k] = c;
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
        rem.iter().all(|&r| r == 0).then(|| trim(quot))
    }
}

/// All 24 arrangements of the slots 0..4, in lexicographic order.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                let d = 6 - a - b - c;
                out.push([a, b, c, d]);
            }
        }
    }
    out
}

/// +1 for even, −1 for odd arrangements, by inversion count.
pub fn permutation_sign(p: &[usize; 4]) -> i64 {
    let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 { 1 } else { -1 }
}

/// Factored form of a characteristic polynomial `det(op − λI)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectralClass {
    /// (1−λ)⁴
    Identity,
    /// (1−λ)²(1+λ+λ²)
    ThreeCycle,
    /// (1−λ)²(1+λ)²
    DoubleTransposition,
    /// (1−λ)³(1+λ)
    Transposition,
    /// (1−λ)(1+λ)(λ²+1)
    FourCycle,
}

impl SpectralClass {
    pub const ALL: [SpectralClass; 5] = [
        SpectralClass::Identity,
        SpectralClass::ThreeCycle,
        SpectralClass::DoubleTransposition,
        SpectralClass::Transposition,
        SpectralClass::FourCycle,
    ];

    /// Expanded coefficients (λ⁰..λ⁴) built by multiplying out the factors.
    pub fn expanded(self) -> [i64; 5] {
        const ONE_MINUS: [i64; 2] = [1, -1];
        const ONE_PLUS: [i64; 2] = [1, 1];
        const CYCLO3: [i64; 3] = [1, 1, 1];
        const CYCLO4: [i64; 3] = [1, 0, 1];
        let factors: Vec<&[i64]> = match self {
            SpectralClass::Identity => vec![&ONE_MINUS, &ONE_MINUS, &ONE_MINUS, &ONE_MINUS],
            SpectralClass::ThreeCycle => vec![&ONE_MINUS, &ONE_MINUS, &CYCLO3],
            SpectralClass::DoubleTransposition => vec![&ONE_MINUS, &ONE_MINUS, &ONE_PLUS, &ONE_PLUS],
            SpectralClass::Transposition => vec![&ONE_MINUS, &ONE_MINUS, &ONE_MINUS, &ONE_PLUS],
            SpectralClass::FourCycle => vec![&ONE_MINUS, &ONE_PLUS, &CYCLO4],
        };
        let p = factors.into_iter().fold(vec![1], |acc, f| poly::mul(&acc, f));
        let mut out = [0; 5];
        out[..p.len()].copy_from_slice(&p);
        out
    }

    pub fn factored(self) -> &'static str {
        match self {
            SpectralClass::Identity => "(1-λ)^4",
            SpectralClass::ThreeCycle => "(1-λ)^2(1+λ+λ^2)",
            SpectralClass::DoubleTransposition => "(1-λ)^2(1+λ)^2",
            SpectralClass::Transposition => "(1-λ)^3(1+λ)",
            SpectralClass::FourCycle => "(1-λ)(1+λ)(λ^2+1)",
        }
    }
}

impl fmt::Display for SpectralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.factored())
    }
}

/// `det(op − λI)` with exact integer coefficients of λ⁰..λ⁴.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharPoly {
    pub coefficients: [i64; 5],
}

impl CharPoly {
    /// Leibniz expansion over all 24 permutations with polynomial entries.
    pub fn of(op: &Operator) -> Self {
        let mut acc: Vec<i64> = vec![0];
        for cols in permutations4() {
            let sign = permutation_sign(&cols);
            let term = (0..4).fold(vec![sign], |prod, row| {
                let col = cols[row];
                let mut entry = vec![op.matrix[row][col] as i64];
                if row == col {
                    entry.push(-1);
                }
                poly::mul(&prod, &poly::trim(entry))
            });
            acc = poly::add(&acc, &term);
        }
        let mut coefficients = [0; 5];
        coefficients[..acc.len()].copy_from_slice(&acc);
        Self { coefficients }
    }

    pub fn eval_int(&self, x: i64) -> i64 {
        self.coefficients.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn eval(&self, x: Cyclotomic12) -> Cyclotomic12 {
        self.coefficients
            .iter()
            .rev()
            .fold(Cyclotomic12::ZERO, |acc, &c| acc * x + Cyclotomic12::from_int(c))
    }

    /// Factored class, matched up to overall sign: for odd permutations the
    /// factored form is `−det(op − λI)`, which has the same roots.
    pub fn class(&self) -> Option<SpectralClass> {
        let negated = self.coefficients.map(|c| -c);
        SpectralClass::ALL
            .into_iter()
            .find(|c| c.expanded() == self.coefficients || c.expanded() == negated)
    }
}

/// The six roots of unity that occur as eigenvalues of 4×4 permutation matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Eigenvalue {
    One,
    MinusOne,
    I,
    MinusI,
    /// (−1 + i√3)/2
    Omega,
    /// (−1 − i√3)/2
    OmegaBar,
}

impl Eigenvalue {
    pub const ALL: [Eigenvalue; 6] = [
        Eigenvalue::One,
        Eigenvalue::MinusOne,
        Eigenvalue::I,
        Eigenvalue::MinusI,
        Eigenvalue::Omega,
        Eigenvalue::OmegaBar,
    ];

    /// Exponent `k` with value `e^{2πik/12}`.
    pub fn twelfth_exponent(self) -> i64 {
        match self {
            Eigenvalue::One => 0,
            Eigenvalue::MinusOne => 6,
            Eigenvalue::I => 3,
            Eigenvalue::MinusI => 9,
            Eigenvalue::Omega => 4,
            Eigenvalue::OmegaBar => 8,
        }
    }

    pub fn order(self) -> u32 {
        match self {
            Eigenvalue::One => 1,
            Eigenvalue::MinusOne => 2,
            Eigenvalue::Omega | Eigenvalue::OmegaBar => 3,
            Eigenvalue::I | Eigenvalue::MinusI => 4,
        }
    }

    pub fn exact(self) -> Cyclotomic12 {
        Cyclotomic12::root_of_unity(self.twelfth_exponent())
    }

    pub fn to_complex(self) -> num_complex::Complex64 {
        self.exact().to_complex()
    }

    /// Minimal polynomial over the integers, low degree first.
    fn minimal_polynomial(self) -> &'static [i64] {
        match self {
            Eigenvalue::One => &[-1, 1],
            Eigenvalue::MinusOne => &[1, 1],
            Eigenvalue::I | Eigenvalue::MinusI => &[1, 0, 1],
            Eigenvalue::Omega | Eigenvalue::OmegaBar => &[1, 1, 1],
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eigenvalue::One => "1",
            Eigenvalue::MinusOne => "-1",
            Eigenvalue::I => "i",
            Eigenvalue::MinusI => "-i",
            Eigenvalue::Omega => "(-1+i√3)/2",
            Eigenvalue::OmegaBar => "(-1-i√3)/2",
        })
    }
}

/// Multiset of the four eigenvalues, sorted in [`Eigenvalue`] order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EigenSet {
    pub values: Vec<Eigenvalue>,
}

impl EigenSet {
    /// Roots of the characteristic polynomial, with multiplicities found by
    /// repeated exact division by each candidate's minimal polynomial.
    pub fn of(op: &Operator) -> Self {
        let cp = op.char_poly();
        let mut values = Vec::with_capacity(4);
        for ev in Eigenvalue::ALL {
            debug_assert_eq!(cp.eval(ev.exact()).is_zero(), multiplicity(&cp, ev) > 0);
            for _ in 0..multiplicity(&cp, ev) {
                values.push(ev);
            }
        }
        assert_eq!(values.len(), 4, "characteristic polynomial of {op} does not split over roots of unity");
        Self { values }
    }

    pub fn product(&self) -> Cyclotomic12 {
        self.values.iter().fold(Cyclotomic12::ONE, |acc, v| acc * v.exact())
    }

    pub fn distinct(&self) -> Vec<Eigenvalue> {
        let mut d = self.values.clone();
        d.dedup();
        d
    }
}

impl fmt::Display for EigenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn multiplicity(cp: &CharPoly, ev: Eigenvalue) -> usize {
    let mut p = poly::trim(cp.coefficients.to_vec());
    let min = ev.minimal_polynomial();
    let mut count = 0;
    while let Some(q) = poly::div_exact(&p, min) {
        count += 1;
        p = q;
    }
    count
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenpair {
    pub value: Eigenvalue,
    pub vector: [Cyclotomic12; 4],
}

impl Eigenpair {
    /// `(op − λI)v` computed exactly.
    pub fn residual(&self, op: &Operator) -> [Cyclotomic12; 4] {
        let lambda = self.value.exact();
        let moved = op.apply(&self.vector);
        [0, 1, 2, 3].map(|i| moved[i] - lambda * self.vector[i])
    }

    pub fn residual_is_zero(&self, op: &Operator) -> bool {
        self.residual(op).iter().all(Cyclotomic12::is_zero)
    }

    /// Max modulus of `(op − λI)v` evaluated in floating point.
    pub fn float_residual(&self, op: &Operator) -> f64 {
        let lambda = self.value.to_complex();
        let v = self.vector.map(|c| c.to_complex());
        let moved = op.apply(&v);
        (0..4).map(|i| (moved[i] - lambda * v[i]).norm()).fold(0.0, f64::max)
    }
}

/// One eigenvector per unit of multiplicity. Each vector is supported on a
/// single cycle of the permutation, starts with 1 at the cycle's smallest
/// slot and follows `v[img(s)] = λ·v[s]` around it.
fn eigenpairs(op: &Operator) -> Vec<Eigenpair> {
    let img = op.images();
    let cycles = op.cycles();
    let mut out = Vec::new();
    for value in op.eigenvalues().distinct() {
        let k = value.twelfth_exponent();
        for cycle in cycles.iter().filter(|c| (c.len() as i64 * k) % 12 == 0) {
            let mut vector = [Cyclotomic12::ZERO; 4];
            let mut slot = cycle[0];
            for step in 0..cycle.len() as i64 {
                vector[slot] = Cyclotomic12::root_of_unity(k * step);
                slot = img[slot];
            }
            out.push(Eigenpair { value, vector });
        }
    }
    out
}

/// `[a, b] = ab − ba` written as the pair of group products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutatorDecomposition {
    pub lhs_product: Operator,
    pub rhs_product: Operator,
    pub is_zero: bool,
}

impl CommutatorDecomposition {
    /// Kind shared by both products, read off their determinants.
    pub fn kind(&self) -> Kind {
        Kind::from_determinant(self.lhs_product.determinant()).expect("permutation determinant")
    }

    pub fn same_kind(&self) -> bool {
        self.lhs_product.determinant() == self.rhs_product.determinant()
    }
}

impl fmt::Display for CommutatorDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero {
            write!(f, "0")
        } else {
            write!(f, "{} - {}", self.lhs_product, self.rhs_product)
        }
    }
}

pub fn commutator(a: &Operator, b: &Operator) -> CommutatorDecomposition {
    let lhs_product = a.compose(b);
    let rhs_product = b.compose(a);
    CommutatorDecomposition { lhs_product, rhs_product, is_zero: lhs_product == rhs_product }
}

/// Multiplication table of the 24 operators in canonical order; cell
/// `(row a, column b)` holds `a · b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    cells: [[OperatorId; 24]; 24],
}

impl CayleyTable {
    pub fn new() -> Self {
        let ops: Vec<Operator> = Operator::all().collect();
        let mut cells = [[OperatorId::from_ordinal(0); 24]; 24];
        for (i, a) in ops.iter().enumerate() {
            for (j, b) in ops.iter().enumerate() {
                cells[i][j] = a.compose(b).id();
            }
        }
        Self { cells }
    }

    pub fn product(&self, a: OperatorId, b: OperatorId) -> OperatorId {
        self.cells[a.ordinal()][b.ordinal()]
    }

    pub fn row(&self, a: OperatorId) -> &[OperatorId; 24] {
        &self.cells[a.ordinal()]
    }

    pub fn rows(&self) -> &[[OperatorId; 24]; 24] {
        &self.cells
    }

    /// The unique `b` with `a·b = R1`.
    pub fn inverse(&self, a: OperatorId) -> OperatorId {
        let identity = Operator::identity().id();
        let col = self.row(a).iter().position(|&c| c == identity).expect("group has inverses");
        OperatorId::from_ordinal(col)
    }
}

impl Default for CayleyTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Number of independent parameters of O(N): `N(N−1)/2`.
pub fn group_dimension(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(ChiralError::Argument(format!("group dimension needs N >= 2, got {n}")));
    }
    Ok(n * (n - 1) / 2)
}
