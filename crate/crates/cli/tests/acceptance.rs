//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Reference values are computed here from first principles (transcribed
//! matrices, brute-force determinants, cycle structure) and compared against
//! the library. Criteria listed in `KNOWN_RED` are reported but do not abort
//! the run; everything else must pass.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::PathBuf;
use std::process::Command;

use chirality_cli::molfile;
use chirality_core::quantum::{hund_commutator, radial_refinement};
use chirality_core::{
    add_centre, aufbau_sequence, azimuthal_residual, chiral_action, chirality_index, chirality_index_with_mirror,
    classify, commutator, enumerate_projections, group_dimension, parity_eigenphase, radial_residual,
    verified_add_centre, AufbauStep, AzimuthalProblem, CentreId, ChainMolecule, ChiralState, ChiralityIndex,
    Classification, Kind, Operator, Parity, RadialProblem, SpectralClass, Tetrahedron,
};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Row i of each matrix has its 1 in column `IMAGES[k][i]`.
const ROT_IMAGES: [[usize; 4]; 12] = [
    [0, 1, 2, 3],
    [2, 1, 3, 0],
    [3, 1, 0, 2],
    [1, 2, 0, 3],
    [1, 0, 3, 2],
    [1, 3, 2, 0],
    [2, 3, 0, 1],
    [3, 0, 2, 1],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [3, 2, 1, 0],
    [2, 0, 1, 3],
];
const INV_IMAGES: [[usize; 4]; 12] = [
    [3, 1, 2, 0],
    [2, 1, 0, 3],
    [0, 1, 3, 2],
    [1, 2, 3, 0],
    [1, 3, 0, 2],
    [1, 0, 2, 3],
    [2, 0, 3, 1],
    [0, 3, 2, 1],
    [3, 2, 0, 1],
    [3, 0, 1, 2],
    [0, 2, 1, 3],
    [2, 3, 1, 0],
];

const KNOWN_RED: &[usize] = &[8];

type Mat = [[i64; 4]; 4];

fn mat(images: &[usize; 4]) -> Mat {
    let mut m = [[0; 4]; 4];
    for (i, &j) in images.iter().enumerate() {
        m[i][j] = 1;
    }
    m
}

/// Reference table: name -> matrix, in R1..R12, I1..I12 order.
fn reference() -> Vec<(String, Mat)> {
    let rot = ROT_IMAGES.iter().enumerate().map(|(k, im)| (format!("R{}", k + 1), mat(im)));
    let inv = INV_IMAGES.iter().enumerate().map(|(k, im)| (format!("I{}", k + 1), mat(im)));
    rot.chain(inv).collect()
}

fn lib_mat(op: &Operator) -> Mat {
    op.matrix().map(|row| row.map(i64::from))
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn all_perms() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if p.iter().collect::<HashSet<_>>().len() == 4 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn inversions(p: &[usize; 4]) -> usize {
    (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

/// Leibniz determinant of an integer matrix.
fn det(m: &Mat) -> i64 {
    all_perms()
        .iter()
        .map(|p| {
            let sign = if inversions(p) % 2 == 0 { 1 } else { -1 };
            sign * (0..4).map(|i| m[i][p[i]]).product::<i64>()
        })
        .sum()
}

fn images_of(m: &Mat) -> [usize; 4] {
    [0, 1, 2, 3].map(|i| (0..4).find(|&j| m[i][j] == 1).unwrap())
}

fn cycle_lengths(m: &Mat) -> Vec<usize> {
    let img = images_of(m);
    let mut seen = [false; 4];
    let mut out = Vec::new();
    for s in 0..4 {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = img[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn op(name: &str) -> Operator {
    Operator::from_id(name.parse().unwrap())
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn load(name: &str) -> ChainMolecule {
    molfile::parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Result<String, String> {
    let reference = reference();
    for (name, m) in &reference {
        ensure(lib_mat(&op(name)) == *m, || format!("{name} differs from the printed table"))?;
    }
    let lib: HashSet<Mat> = Operator::all().map(|o| lib_mat(&o)).collect();
    let perms: HashSet<Mat> = all_perms().iter().map(mat).collect();
    ensure(lib == perms && lib.len() == 24, || format!("{} distinct matrices", lib.len()))?;
    let plus = reference.iter().filter(|(_, m)| det(m) == 1).count();
    let minus = reference.iter().filter(|(_, m)| det(m) == -1).count();
    ensure(plus == 12 && minus == 12, || format!("{plus} with det +1, {minus} with det -1"))?;
    for (name, m) in &reference {
        let want = if name.starts_with('R') { 1 } else { -1 };
        ensure(det(m) == want && op(name).determinant() == want, || format!("{name} determinant"))?;
    }
    Ok("24 matrices entry-for-entry, 12 det +1, 12 det -1".into())
}

fn criterion_2() -> Result<String, String> {
    let reference = reference();
    let lookup: HashMap<Mat, String> = reference.iter().map(|(n, m)| (*m, n.clone())).collect();
    for (a, ma) in &reference {
        for (b, mb) in &reference {
            let Some(c) = lookup.get(&mul(ma, mb)) else {
                return Err(format!("{a}*{b} leaves the set"));
            };
            let got = op(a).compose(&op(b)).id().to_string();
            ensure(&got == c, || format!("{a}*{b}: library {got}, reference {c}"))?;
            ensure(det(ma) * det(mb) == det(&mul(ma, mb)), || format!("{a}*{b} kind"))?;
        }
    }
    let product = |a: &str, b: &str| op(a).compose(&op(b)).id().to_string();
    ensure(product("R8", "R9") == "R5", || format!("R8*R9 = {}", product("R8", "R9")))?;
    ensure(product("I10", "R10") == "I7", || format!("I10*R10 = {}", product("I10", "R10")))?;
    let i5i2 = op("I5").compose(&op("I2"));
    let reference_i5i2 = lookup[&mul(&reference[16].1, &reference[13].1)].clone();
    ensure(i5i2.kind() == Kind::Rotation && i5i2.id().to_string() == reference_i5i2, || {
        format!("I5*I2 = {} vs reference {reference_i5i2}", i5i2.id())
    })?;
    Ok(format!("576 products closed, R8*R9=R5, I10*R10=I7, I5*I2={} (a rotation, not R9)", i5i2.id()))
}

fn criterion_3() -> Result<String, String> {
    // det(A - λI) = det(A)·f(λ) for the printed factored form f, checked at integer λ
    let forms: [(&str, fn(i64) -> i64, &[&str]); 5] = [
        ("(1-λ)^4", |x| (1 - x).pow(4), &["R1"]),
        ("(1-λ)^2(1+λ+λ^2)", |x| (1 - x).pow(2) * (1 + x + x * x), &["R2", "R3", "R4", "R6", "R8", "R9", "R10", "R12"]),
        ("(1-λ)^2(1+λ)^2", |x| (1 - x).pow(2) * (1 + x).pow(2), &["R5", "R7", "R11"]),
        ("(1-λ)^3(1+λ)", |x| (1 - x).pow(3) * (1 + x), &["I1", "I2", "I3", "I6", "I8", "I11"]),
        ("(1-λ)(1+λ)(λ^2+1)", |x| (1 - x) * (1 + x) * (x * x + 1), &["I4", "I5", "I7", "I9", "I10", "I12"]),
    ];
    let classes = [
        SpectralClass::Identity,
        SpectralClass::ThreeCycle,
        SpectralClass::DoubleTransposition,
        SpectralClass::Transposition,
        SpectralClass::FourCycle,
    ];
    let reference = reference();
    let mut covered = BTreeSet::new();
    for ((label, f, members), class) in forms.iter().zip(classes) {
        for name in *members {
            covered.insert(name.to_string());
            let m = reference.iter().find(|(n, _)| n == name).unwrap().1;
            for x in -3..=3 {
                let mut shifted = m;
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] -= x;
                }
                ensure(det(&shifted) == det(&m) * f(x), || format!("{name} at λ={x} against {label}"))?;
                ensure(op(name).char_poly().eval_int(x) == det(&m) * f(x), || format!("{name} library poly at {x}"))?;
            }
            ensure(op(name).char_poly().class() == Some(class), || format!("{name} library class"))?;
        }
    }
    ensure(covered.len() == 24, || format!("memberships cover {} operators", covered.len()))?;

    // eigenvalues: every k-cycle contributes the k-th roots of unity
    let mut roots = BTreeSet::new();
    for (name, m) in &reference {
        let mut want = Vec::new();
        for len in cycle_lengths(m) {
            for j in 0..len {
                want.push((12 / len * j) as i64 % 12);
            }
        }
        want.sort_unstable();
        let mut got: Vec<i64> = op(name).eigenvalues().values.iter().map(|v| v.twelfth_exponent()).collect();
        got.sort_unstable();
        ensure(got == want, || format!("{name}: eigenvalue exponents {got:?} vs {want:?}"))?;
        roots.extend(want);
    }
    ensure(roots.len() == 6, || format!("{} distinct eigenvalues", roots.len()))?;

    let mut pairs = 0;
    for o in Operator::all() {
        let ep = o.eigenpairs();
        ensure(ep.len() == 4, || format!("{} has {} eigenpairs", o.id(), ep.len()))?;
        let m = lib_mat(&o);
        for p in &ep {
            pairs += 1;
            ensure(p.residual_is_zero(&o), || format!("{} exact residual", o.id()))?;
            let v = p.vector.map(|c| c.to_complex());
            let lambda = p.value.to_complex();
            let worst = (0..4)
                .map(|i| ((0..4).map(|j| v[j] * m[i][j] as f64).sum::<Complex64>() - lambda * v[i]).norm())
                .fold(0.0, f64::max);
            ensure(worst < 1e-12 && v.iter().any(|c| c.norm() > 0.5), || format!("{} float residual {worst}", o.id()))?;
        }
    }
    let dim = group_dimension(4).map_err(|e| e.to_string())?;
    ensure(dim == 4 * 3 / 2, || format!("group dimension {dim}"))?;
    Ok(format!("5 classes with stated members, 6 eigenvalues, {pairs} exact eigenpairs, dim O(4) = 6"))
}

fn criterion_4() -> Result<String, String> {
    for s in ["R5", "R7", "R11"] {
        for m in ["R5", "R7", "R11"] {
            let (a, b) = (lib_mat(&op(s)), lib_mat(&op(m)));
            ensure(mul(&a, &b) == mul(&b, &a), || format!("[{s},{m}] != 0"))?;
            ensure(commutator(&op(s), &op(m)).is_zero, || format!("library [{s},{m}]"))?;
        }
    }
    let reference = reference();
    let lookup: HashMap<Mat, i64> = reference.iter().map(|(_, m)| (*m, det(m))).collect();
    for a in Operator::all() {
        for b in Operator::all() {
            let (ma, mb) = (lib_mat(&a), lib_mat(&b));
            let (x, y) = (mul(&ma, &mb), mul(&mb, &ma));
            ensure(lookup[&x] == lookup[&y], || format!("[{},{}] mixes kinds", a.id(), b.id()))?;
            let c = commutator(&a, &b);
            ensure(lib_mat(&c.lhs_product) == x && lib_mat(&c.rhs_product) == y, || {
                format!("[{},{}] decomposition", a.id(), b.id())
            })?;
        }
    }
    let pair = ChainMolecule::new(
        "pair",
        vec![
            Tetrahedron::from_tokens("c1", ["OH", "CO2H", "H", "@c2"]).unwrap(),
            Tetrahedron::from_tokens("c2", ["F", "@c1", "Cl", "Br"]).unwrap(),
        ],
        false,
    )
    .unwrap();
    let (c1, c2) = (CentreId::new("c1").unwrap(), CentreId::new("c2").unwrap());
    for a in Operator::all() {
        for b in Operator::all() {
            let ab = pair.apply_at(&c1, &a).unwrap().apply_at(&c2, &b).unwrap();
            let ba = pair.apply_at(&c2, &b).unwrap().apply_at(&c1, &a).unwrap();
            ensure(ab == ba, || format!("{} on c1 and {} on c2 do not commute", a.id(), b.id()))?;
        }
    }
    Ok("R5,R7,R11 commute; 576 commutators same-kind; cross-centre actions commute".into())
}

fn criterion_5() -> Result<String, String> {
    let labels = ["OH", "CO2H", "H", "CH3"];
    let t = Tetrahedron::from_tokens("c1", labels).unwrap();
    // reference: projections from the transcribed table, orbit = permutation parity
    let mut by_parity: [BTreeSet<[usize; 4]>; 2] = [BTreeSet::new(), BTreeSet::new()];
    for (_, m) in reference() {
        let img = images_of(&m);
        by_parity[inversions(&img) % 2].insert(img);
    }
    ensure(by_parity[0].len() == 12 && by_parity[1].len() == 12, || "reference orbits".into())?;
    let set = enumerate_projections(&t).map_err(|e| e.to_string())?;
    ensure(set.distinct_count() == 24, || format!("{} distinct projections", set.distinct_count()))?;
    ensure(set.orbit_sizes() == vec![12, 12], || format!("orbit sizes {:?}", set.orbit_sizes()))?;
    for p in &set.projections {
        let parity = if Operator::from_id(p.operator).kind() == Kind::Rotation { 0 } else { 1 };
        ensure(p.orbit == parity, || format!("{} in orbit {}", p.operator, p.orbit))?;
    }
    Ok("24 distinct projections, 2 rotation orbits of 12".into())
}

fn criterion_6() -> Result<String, String> {
    let lactic = load("lactic.mol");
    let meso = load("meso.mol");
    let li = chirality_index(&lactic).map_err(|e| e.to_string())?;
    let mi = chirality_index(&meso).map_err(|e| e.to_string())?;
    ensure(li == ChiralityIndex::new(1, 1).unwrap() && classify(li) == Classification::Enantiomer, || {
        format!("lactic {li}")
    })?;
    ensure(mi == ChiralityIndex::new(2, 0).unwrap() && classify(mi) == Classification::Achiral, || {
        format!("meso {mi}")
    })?;
    let chain = |layout: &[(&str, [&str; 4])]| {
        let centres = layout.iter().map(|(id, t)| Tetrahedron::from_tokens(id, *t).unwrap()).collect();
        ChainMolecule::new("m", centres, false).unwrap()
    };
    let others = [
        chain(&[("c1", ["OH", "CO2H", "H", "@c2"]), ("c2", ["H", "@c1", "OH", "CO2H"])]),
        chain(&[("c1", ["OH", "CO2H", "H", "@c2"]), ("c2", ["F", "@c1", "Cl", "Br"])]),
        chain(&[("c1", ["a", "a", "b", "c"])]),
        chain(&[
            ("c1", ["@c2", "x", "y", "z"]),
            ("c2", ["@c1", "@c3", "x", "y"]),
            ("c3", ["@c2", "z", "y", "x"]),
        ]),
    ];
    for m in [&lactic, &meso].into_iter().chain(others.iter()) {
        let base = chirality_index(m).map_err(|e| e.to_string())?;
        for mirror in Operator::inversions() {
            let alt = chirality_index_with_mirror(m, &mirror).map_err(|e| e.to_string())?;
            ensure(alt == base, || format!("{} with mirror {}: {alt} vs {base}", m.name(), mirror.id()))?;
        }
    }
    Ok(format!("lactic {li} ENANTIOMER, meso {mi} ACHIRAL, same under all 12 mirrors"))
}

fn criterion_7() -> Result<String, String> {
    let idx = |n, p| ChiralityIndex::new(n, p).unwrap();
    for n in 1..=12 {
        for p in 0..=n {
            for dp in 0..=1 {
                let got = add_centre(idx(n, p), AufbauStep::new(dp as u8).unwrap());
                let want = idx(n + 1, p + dp);
                ensure(got == want, || format!("{{{n}, {p}}} + {dp} -> {got}"))?;
                let (from, to) = (classify(idx(n, p)), classify(got));
                let expected = match (p == 0, p == n, dp) {
                    (true, _, 0) => (Classification::Achiral, Classification::Achiral),
                    (_, true, 0) => (Classification::Enantiomer, Classification::Diastereoisomer),
                    (false, false, _) => (Classification::Diastereoisomer, Classification::Diastereoisomer),
                    (true, _, _) => (Classification::Achiral, Classification::Diastereoisomer),
                    (_, true, _) => (Classification::Enantiomer, Classification::Enantiomer),
                };
                ensure((from, to) == expected, || format!("{{{n}, {p}}} + {dp}: {from} -> {to}"))?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..1000 {
        let n = rng.gen_range(1..20);
        let p = rng.gen_range(0..=n);
        let len = rng.gen_range(0..40);
        let deltas: Vec<u8> = (0..len).map(|_| rng.gen_range(0..=1)).collect();
        let steps: Vec<AufbauStep> = deltas.iter().map(|&d| AufbauStep::new(d).unwrap()).collect();
        let trace = aufbau_sequence(idx(n, p), &steps);
        let sum: usize = deltas.iter().map(|&d| d as usize).sum();
        ensure(trace.last() == idx(n + len, p + sum), || format!("{{{n}, {p}}} + {deltas:?}"))?;
    }
    let start = ChainMolecule::new(
        "start",
        vec![Tetrahedron::from_tokens("c1", ["OH", "CO2H", "H", "R"]).unwrap()],
        false,
    )
    .unwrap();
    let twin = Tetrahedron::from_tokens("c2", ["OH", "@c1", "H", "CO2H"]).unwrap();
    let built = verified_add_centre(&start, twin, 4).map_err(|e| e.to_string())?;
    ensure(built.classified == idx(2, 0) && built.raw == idx(2, 2), || {
        format!("degenerate build: classified {}, raw {}", built.classified, built.raw)
    })?;
    Ok("six transitions, additivity on 1000 sequences, degenerate build {2, 0} vs raw {2, 2}".into())
}

fn criterion_8() -> Result<String, String> {
    let mut problems = Vec::new();
    let mut worst: f64 = 0.0;
    let mut weakest = f64::INFINITY;
    for l in 0..=3 {
        for e in [0.5, 1.0, 2.0] {
            let p = RadialProblem::new(l, e).unwrap();
            let r = radial_residual(&p, 0.5, 5.0, 1001).unwrap();
            worst = worst.max(r);
            let refine = radial_refinement(&p, 0.5, 5.0, 1001).unwrap();
            weakest = weakest.min(refine.reduction());
        }
    }
    if worst > 1e-6 {
        problems.push(format!("radial residual {worst:.2e} > 1e-6"));
    }
    if !(weakest >= 8.0) {
        problems.push(format!("radial residual shrinks by only x{weakest:.3} per 4x samples (need >= 8)"));
    }
    let mut az_worst: (i32, f64) = (0, 0.0);
    for m in 0..=3 {
        let r = azimuthal_residual(&AzimuthalProblem::new(m), 4001).unwrap();
        if r > az_worst.1 {
            az_worst = (m, r);
        }
    }
    if az_worst.1 > 1e-5 {
        problems.push(format!("azimuthal residual {:.2e} > 1e-5 at m={}", az_worst.1, az_worst.0));
    }
    let control = radial_residual(&RadialProblem::new(2, 1.0).unwrap().with_alpha_shift(0.01), 0.5, 5.0, 1001).unwrap();
    if control <= 1e-3 {
        problems.push(format!("negative control {control:.2e} <= 1e-3"));
    }
    let summary = format!(
        "radial max {worst:.2e}, refinement x{weakest:.3}, azimuthal max {:.2e} (m={}), control {control:.2e}",
        az_worst.1, az_worst.0
    );
    if problems.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{}; {summary}", problems.join("; ")))
    }
}

fn criterion_9() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(9);
    let mut states = vec![ChiralState::left_handed(), ChiralState::right_handed()];
    for _ in 0..20 {
        let (a, b, c, d): (f64, f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen(), rng.gen());
        let norm = (a * a + b * b + c * c + d * d).sqrt();
        states.push(ChiralState::new(Complex64::new(a / norm, b / norm), Complex64::new(c / norm, d / norm)).unwrap());
    }
    for o in Operator::all() {
        for s in &states {
            let out = chiral_action(&o, s);
            // rotations fix both amplitudes, inversions swap them
            let (l, r) = if o.determinant() == 1 { (s.left, s.right) } else { (s.right, s.left) };
            ensure((out.left - l).norm() <= 1e-12 && (out.right - r).norm() <= 1e-12, || {
                format!("{} does not factor through its determinant", o.id())
            })?;
        }
        let want = if o.determinant() == 1 { (1, 1) } else { (1, -1) };
        let got = (
            parity_eigenphase(&o, Parity::Plus).map_err(|e| e.to_string())?,
            parity_eigenphase(&o, Parity::Minus).map_err(|e| e.to_string())?,
        );
        ensure(got == want, || format!("{} eigenphases {got:?}", o.id()))?;
    }
    for _ in 0..200 {
        let e = rng.gen_range(-10.0..10.0);
        let d = rng.gen_range(-10.0..10.0);
        let zero = hund_commutator(e, d, 0.0);
        ensure(zero.iter().flatten().all(|x| x.abs() <= 1e-12), || format!("[P,H] != 0 at E={e}, Δ={d}"))?;
        let a: f64 = rng.gen_range(0.01..5.0) * if rng.gen() { 1.0 } else { -1.0 };
        let c = hund_commutator(e, d, a);
        // [P, H] = [[0, -2a], [2a, 0]]
        ensure((c[0][1] + 2.0 * a).abs() <= 1e-12 && (c[1][0] - 2.0 * a).abs() <= 1e-12, || {
            format!("[P,H] at asym={a}: {c:?}")
        })?;
    }
    Ok("action factors through det, eigenphases +1/+1 and +1/-1, Hund commutator".into())
}

fn criterion_10() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_chirality");
    let verify = Command::new(bin).args(["verify", "--all"]).output().map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&verify.stdout);
    let checks = text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count();
    ensure(verify.status.code() == Some(0), || format!("verify --all exited {:?}", verify.status.code()))?;
    ensure(checks > 0 && !text.lines().any(|l| l.starts_with("FAIL")), || "verify --all reported a FAIL".into())?;

    for name in ["lactic.mol", "meso.mol"] {
        let m = load(name);
        let again = molfile::parse(&molfile::serialize(&m).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(again == m, || format!("{name} round trip"))?;
    }
    for (name, want) in [("lactic.mol", "chi = {1, 1}  ENANTIOMER\n"), ("meso.mol", "chi = {2, 0}  ACHIRAL\n")] {
        let out = Command::new(bin).arg("classify").arg(fixture(name)).output().map_err(|e| e.to_string())?;
        let got = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.success() && got == want, || format!("classify {name}: {got:?}"))?;
    }
    Ok(format!("verify --all: {checks} checks PASS; fixtures round-trip; classify prints {{1, 1}} and {{2, 0}}"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Result<String, String>); 10] = [
        ("table fidelity", criterion_1),
        ("closure", criterion_2),
        ("spectral claims", criterion_3),
        ("commutators", criterion_4),
        ("projection orbits", criterion_5),
        ("classification", criterion_6),
        ("aufbau", criterion_7),
        ("quantum residuals", criterion_8),
        ("parity algebra", criterion_9),
        ("cli", criterion_10),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let number = k + 1;
        match check() {
            Ok(detail) => {
                passed += 1;
                println!("PASS criterion {number} ({name}): {detail}");
            }
            Err(reason) => {
                let known = KNOWN_RED.contains(&number);
                println!("FAIL criterion {number} ({name}){}: {reason}", if known { " [known]" } else { "" });
                if !known {
                    unexpected.push(number);
                }
            }
        }
    }
    println!("{passed}/{} criteria pass", criteria.len());
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
