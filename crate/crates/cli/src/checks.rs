//! The checks behind `verify`. Each group returns named PASS/FAIL results.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use chirality_core::algebra::{permutations4, PermMatrix};
use chirality_core::quantum::{azimuthal_refinement, azimuthal_truncation, hund_commutator, is_zero_matrix};
use chirality_core::{
    azimuthal_residual, chiral_action, commutator, group_dimension, parity_eigenphase, radial_residual,
    AzimuthalProblem, CayleyTable, ChainMolecule, CentreId, ChiralState, EigenSet, Eigenvalue, Kind, Operator,
    OperatorId, Parity, RadialProblem, SpectralClass, Tetrahedron,
};
use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), pass, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag}  {}", self.name)
        } else {
            write!(f, "{tag}  {}  ({})", self.name, self.detail)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Group {
    Closure,
    Eigen,
    Commutators,
    Quantum,
}

impl Group {
    pub const ALL: [Group; 4] = [Group::Closure, Group::Eigen, Group::Commutators, Group::Quantum];

    pub fn run(self) -> Vec<Check> {
        match self {
            Group::Closure => closure(),
            Group::Eigen => eigen(),
            Group::Commutators => commutators(),
            Group::Quantum => quantum(),
        }
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

fn rot(k: u8) -> Operator {
    Operator::rotation(k).expect("index in 1..=12")
}

fn inv(k: u8) -> Operator {
    Operator::inversion(k).expect("index in 1..=12")
}

fn ids(ops: &[Operator]) -> String {
    ops.iter().map(|o| o.id().to_string()).collect::<Vec<_>>().join(",")
}

pub fn closure() -> Vec<Check> {
    let ops: Vec<Operator> = Operator::all().collect();
    let mut out = Vec::new();

    let all_perms: HashSet<PermMatrix> = permutations4()
        .into_iter()
        .map(|p| {
            let mut m = [[0u8; 4]; 4];
            for (i, &j) in p.iter().enumerate() {
                m[i][j] = 1;
            }
            m
        })
        .collect();
    let ours: HashSet<PermMatrix> = ops.iter().map(|o| *o.matrix()).collect();
    out.push(Check::new(
        "closure: operators are the 24 distinct permutation matrices",
        ours.len() == 24 && ours == all_perms,
        format!("{} distinct", ours.len()),
    ));

    let det_ok = ops.iter().all(|o| o.determinant() == o.kind().sign());
    let plus = ops.iter().filter(|o| o.determinant() == 1).count();
    out.push(Check::new(
        "closure: rotations have det +1, inversions det -1",
        det_ok && plus == 12,
        format!("{plus} with det +1"),
    ));

    let mut inside = 0;
    let mut kinds_ok = 0;
    for a in &ops {
        for b in &ops {
            if let Some(c) = Operator::from_matrix(&mat_mul(a.matrix(), b.matrix())) {
                inside += 1;
                if c.kind().sign() == a.kind().sign() * b.kind().sign() {
                    kinds_ok += 1;
                }
            }
        }
    }
    out.push(Check::new("closure: all 576 products lie in the group", inside == 576, format!("{inside}/576")));
    out.push(Check::new(
        "closure: kind of a product follows the determinant",
        kinds_ok == 576,
        format!("{kinds_ok}/576"),
    ));

    let table = CayleyTable::new();
    let mut assoc = true;
    for a in &ops {
        for b in &ops {
            let ab = table.product(a.id(), b.id());
            for c in &ops {
                let bc = table.product(b.id(), c.id());
                assoc &= table.product(ab, c.id()) == table.product(a.id(), bc);
            }
        }
    }
    out.push(Check::new("closure: products are associative", assoc, ""));

    let identity = Operator::identity().id();
    let inverses = ops.iter().all(|a| table.product(a.id(), table.inverse(a.id())) == identity);
    out.push(Check::new("closure: every operator has an inverse", inverses, ""));

    let r8r9 = rot(8).compose(&rot(9));
    out.push(Check::new("closure: R8*R9 = R5", r8r9.id() == rot(5).id(), format!("got {}", r8r9.id())));
    let i10r10 = inv(10).compose(&rot(10));
    out.push(Check::new("closure: I10*R10 = I7", i10r10.id() == inv(7).id(), format!("got {}", i10r10.id())));
    let i5i2 = inv(5).compose(&inv(2));
    out.push(Check::new(
        "closure: I5*I2 is a rotation",
        i5i2.kind() == Kind::Rotation,
        format!("got {}, not R9", i5i2.id()),
    ));
    out
}

fn class_members() -> [(SpectralClass, Vec<Operator>); 5] {
    let r = |ks: &[u8]| ks.iter().map(|&k| rot(k)).collect::<Vec<_>>();
    let i = |ks: &[u8]| ks.iter().map(|&k| inv(k)).collect::<Vec<_>>();
    [
        (SpectralClass::Identity, r(&[1])),
        (SpectralClass::ThreeCycle, r(&[2, 3, 4, 6, 8, 9, 10, 12])),
        (SpectralClass::DoubleTransposition, r(&[5, 7, 11])),
        (SpectralClass::Transposition, i(&[1, 2, 3, 6, 8, 11])),
        (SpectralClass::FourCycle, i(&[4, 5, 7, 9, 10, 12])),
    ]
}

pub fn eigen() -> Vec<Check> {
    let mut out = Vec::new();
    for (class, members) in class_members() {
        let actual: Vec<Operator> = Operator::all().filter(|o| o.char_poly().class() == Some(class)).collect();
        let want: BTreeSet<OperatorId> = members.iter().map(Operator::id).collect();
        let got: BTreeSet<OperatorId> = actual.iter().map(Operator::id).collect();
        out.push(Check::new(
            format!("char-poly {}: {}", class.factored(), ids(&members)),
            want == got,
            if want == got { String::new() } else { format!("got {}", ids(&actual)) },
        ));
    }

    let mut seen = BTreeSet::new();
    for op in Operator::all() {
        for v in EigenSet::of(&op).distinct() {
            seen.insert(v.twelfth_exponent());
        }
    }
    let six: BTreeSet<i64> = Eigenvalue::ALL.iter().map(|v| v.twelfth_exponent()).collect();
    out.push(Check::new(
        "eigen: exactly six eigenvalues 1, -1, i, -i, w, w^2 occur",
        seen == six && six.len() == 6,
        format!("{} distinct", seen.len()),
    ));

    let mut pairs = 0;
    let mut exact = 0;
    let mut complete = true;
    for op in Operator::all() {
        let ep = op.eigenpairs();
        complete &= ep.len() == 4;
        for p in &ep {
            pairs += 1;
            if p.residual_is_zero(&op) {
                exact += 1;
            }
        }
    }
    out.push(Check::new(
        "eigen: (op - λI)v = 0 exactly for every eigenpair",
        complete && exact == pairs,
        format!("{exact}/{pairs}"),
    ));

    let dim = group_dimension(4);
    out.push(Check::new("eigen: O(4) has dimension 6", dim.as_ref().ok() == Some(&6), format!("{dim:?}")));
    out
}

pub fn commutators() -> Vec<Check> {
    let mut out = Vec::new();
    let special = [5u8, 7, 11];
    let mut zero = true;
    for &s in &special {
        for &m in &special {
            zero &= commutator(&rot(s), &rot(m)).is_zero;
        }
    }
    out.push(Check::new("commutators: R5, R7, R11 commute pairwise", zero, ""));

    let ops: Vec<Operator> = Operator::all().collect();
    let mut same = 0;
    let mut vanishing = 0;
    for a in &ops {
        for b in &ops {
            let c = commutator(a, b);
            if c.same_kind() {
                same += 1;
            }
            if c.is_zero {
                vanishing += 1;
            }
        }
    }
    out.push(Check::new(
        "commutators: every [a,b] is a difference of same-kind elements",
        same == 576,
        format!("{same}/576, {vanishing} vanish"),
    ));

    let pair = ChainMolecule::new(
        "pair",
        vec![
            Tetrahedron::from_tokens("c1", ["OH", "CO2H", "H", "@c2"]).expect("valid tokens"),
            Tetrahedron::from_tokens("c2", ["F", "@c1", "Cl", "Br"]).expect("valid tokens"),
        ],
        false,
    )
    .expect("valid chain");
    let (c1, c2) = (CentreId::new("c1").expect("id"), CentreId::new("c2").expect("id"));
    let mut independent = 0;
    for a in &ops {
        for b in &ops {
            let ab = pair.apply_at(&c2, b).and_then(|m| m.apply_at(&c1, a));
            let ba = pair.apply_at(&c1, a).and_then(|m| m.apply_at(&c2, b));
            if matches!((ab, ba), (Ok(x), Ok(y)) if x == y) {
                independent += 1;
            }
        }
    }
    out.push(Check::new(
        "commutators: operators on different centres commute",
        independent == 576,
        format!("{independent}/576"),
    ));
    out
}

/// Radial grid used by `verify`.
pub const RADIAL_GRID: (f64, f64, usize) = (0.5, 5.0, 1001);
pub const AZIMUTHAL_SAMPLES: usize = 4001;

pub fn quantum() -> Vec<Check> {
    let mut out = Vec::new();
    let (r_min, r_max, samples) = RADIAL_GRID;

    let mut worst: f64 = 0.0;
    let mut failed = false;
    for l in 0..=3 {
        for e in [0.5, 1.0, 2.0] {
            match RadialProblem::new(l, e).and_then(|p| radial_residual(&p, r_min, r_max, samples)) {
                Ok(r) => worst = worst.max(r),
                Err(_) => failed = true,
            }
        }
    }
    out.push(Check::new(
        "quantum: radial residual <= 1e-6, l = 0..3, E = 0.5, 1, 2",
        !failed && worst <= 1e-6,
        format!("max {worst:.2e}"),
    ));

    let control = RadialProblem::new(2, 1.0)
        .map(|p| p.with_alpha_shift(0.01))
        .and_then(|p| radial_residual(&p, r_min, r_max, samples));
    out.push(Check::new(
        "quantum: perturbed potential leaves a residual > 1e-3",
        matches!(control, Ok(r) if r > 1e-3),
        match control {
            Ok(r) => format!("{r:.2e}"),
            Err(e) => e.to_string(),
        },
    ));

    let mut matched = true;
    let mut detail = Vec::new();
    for m in 0..=3 {
        let res = azimuthal_residual(&AzimuthalProblem::new(m), AZIMUTHAL_SAMPLES);
        let expect = azimuthal_truncation(m, AZIMUTHAL_SAMPLES);
        let ok = matches!(res, Ok(r) if (r - expect).abs() <= 1e-9 + 1e-3 * expect);
        matched &= ok;
        detail.push(format!("m={m}: {:.2e}", res.unwrap_or(f64::NAN)));
    }
    out.push(Check::new(
        "quantum: azimuthal residual equals the stencil truncation error",
        matched,
        detail.join(", "),
    ));

    let refine = azimuthal_refinement(&AzimuthalProblem::new(3), 1001);
    out.push(Check::new(
        "quantum: azimuthal residual is second order",
        matches!(refine, Ok(r) if r.reduction() >= 15.0 && r.reduction() <= 17.0),
        match refine {
            Ok(r) => format!("x{:.2} per 4x samples", r.reduction()),
            Err(e) => e.to_string(),
        },
    ));

    let probe = ChiralState::new(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)).expect("normalised");
    let factors = Operator::all().all(|op| {
        let rep = if op.kind() == Kind::Rotation { Operator::identity() } else { Operator::mirror() };
        chiral_action(&op, &probe).approx_eq(&chiral_action(&rep, &probe))
    });
    out.push(Check::new("parity: chiral action depends only on the determinant", factors, ""));

    let phases = Operator::all().all(|op| {
        let want = if op.kind() == Kind::Rotation { (1, 1) } else { (1, -1) };
        matches!(
            (parity_eigenphase(&op, Parity::Plus), parity_eigenphase(&op, Parity::Minus)),
            (Ok(a), Ok(b)) if (a, b) == want
        )
    });
    out.push(Check::new("parity: no operator mixes the parity states", phases, ""));

    let grid = [-2.0, -0.5, 0.0, 0.3, 1.0, 4.0];
    let mut hund = true;
    for &e in &grid {
        for &d in &grid {
            hund &= is_zero_matrix(&hund_commutator(e, d, 0.0), 1e-12);
            hund &= !is_zero_matrix(&hund_commutator(e, d, 0.25), 1e-12);
        }
    }
    out.push(Check::new("parity: [P, H] = 0 exactly when the handed states are degenerate", hund, ""));
    out
}
