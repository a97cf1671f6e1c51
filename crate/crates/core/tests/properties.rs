//! Randomized algebraic invariants across the crate, driven by proptest.

use proptest::prelude::*;

use rankmatch::field::FieldSpec;
use rankmatch::matrix::Matrix;
use rankmatch::rng::SplitMix64;
use rankmatch::space::{parse_space, random_space, RandomKind, SPAN_CHECK_CAP};
use rankmatch::theorem::{det_polynomial, pf_polynomial};

fn gf(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn random_alternating(spec: FieldSpec, n: usize, rng: &mut SplitMix64) -> Matrix {
    let p = spec.p() as u64;
    let mut m = Matrix::zero(spec, n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = spec.elem(rng.below(p) as i64);
            m.set(i, j, v);
            m.set(j, i, -v);
        }
    }
    m
}

fn random_matrix(spec: FieldSpec, rows: usize, cols: usize, rng: &mut SplitMix64) -> Matrix {
    let p = spec.p() as u64;
    let mut m = Matrix::zero(spec, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, spec.elem(rng.below(p) as i64));
        }
    }
    m
}

proptest! {
    /// Both Pfaffian algorithms agree, pf^2 = det, and alternating matrices
    /// have even rank.
    #[test]
    fn pfaffian_identities(pi in 0usize..3, t in 1usize..5, seed in any::<u64>()) {
        let spec = gf([2u32, 3, 5][pi]);
        let mut rng = SplitMix64::new(seed);
        let m = random_alternating(spec, 2 * t, &mut rng);
        let pf = m.pfaffian_combinatorial().unwrap();
        prop_assert_eq!(pf, m.pfaffian_elimination().unwrap());
        prop_assert_eq!(pf * pf, m.det().unwrap());
        prop_assert_eq!(m.rank() % 2, 0);
    }

    /// Row rank equals column rank, and principal submatrices never gain rank.
    #[test]
    fn rank_transpose_and_submatrix(pi in 0usize..3, n in 1usize..7, seed in any::<u64>()) {
        let spec = gf([2u32, 3, 5][pi]);
        let mut rng = SplitMix64::new(seed);
        let m = random_matrix(spec, n, n, &mut rng);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let keep: Vec<usize> = (0..n).filter(|_| rng.below(2) == 1).collect();
        if !keep.is_empty() {
            prop_assert!(m.principal_submatrix(&keep).unwrap().rank() <= m.rank());
        }
    }

    /// det(AB) = det(A) det(B).
    #[test]
    fn det_multiplicative(pi in 0usize..3, n in 1usize..6, seed in any::<u64>()) {
        let spec = gf([2u32, 3, 5][pi]);
        let mut rng = SplitMix64::new(seed);
        let a = random_matrix(spec, n, n, &mut rng);
        let b = random_matrix(spec, n, n, &mut rng);
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    /// Space files round-trip through parse(serialize(.)).
    #[test]
    fn space_files_round_trip(ki in 0usize..3, pi in 0usize..3, n in 1usize..5, d in 0usize..4, seed in any::<u64>()) {
        let kind = [RandomKind::Symmetric, RandomKind::Alternating, RandomKind::DisjointSupportWs][ki];
        let spec = gf([2u32, 3, 5][pi]);
        let ambient = match kind {
            RandomKind::Alternating => n * (n - 1) / 2,
            _ => n * (n + 1) / 2,
        };
        let d = d.min(ambient);
        let mut rng = SplitMix64::new(seed);
        let s = random_space(kind, spec, n, d, &mut rng).unwrap();
        prop_assert_eq!(parse_space(&s.serialize()).unwrap(), s);
    }

    /// Canonicalization separates leading cells, preserves the span, and the
    /// leading graph has exactly dim S edges.
    #[test]
    fn canonical_form_invariants(ki in 0usize..3, n in 1usize..5, d in 0usize..5, seed in any::<u64>()) {
        let kind = [RandomKind::Symmetric, RandomKind::Alternating, RandomKind::DisjointSupportWs][ki];
        let spec = gf(3);
        let ambient = match kind {
            RandomKind::Alternating => n * (n - 1) / 2,
            _ => n * (n + 1) / 2,
        };
        let d = d.min(ambient);
        let mut rng = SplitMix64::new(seed);
        let s = random_space(kind, spec, n, d, &mut rng).unwrap();
        let canon = s.canonicalize().unwrap();
        prop_assert_eq!(canon.dropped, 0);
        let cells = canon.space.leading_cells().unwrap();
        for i in 0..cells.len() {
            for j in (i + 1)..cells.len() {
                prop_assert_ne!(cells[i], cells[j]);
            }
        }
        prop_assert_eq!(s.leading_graph().unwrap().edge_count(), d);
        // Span equality by enumerating members (3^d <= 81 here).
        let members = |space: &rankmatch::AffineSpace| -> Vec<String> {
            let p = 3u64;
            let total = 3u64.pow(space.dim() as u32);
            let mut out: Vec<String> = (0..total)
                .map(|code| {
                    let mut c = code;
                    let coeffs: Vec<_> = (0..space.dim())
                        .map(|_| {
                            let v = spec.elem((c % p) as i64);
                            c /= p;
                            v
                        })
                        .collect();
                    format!("{}", space.linear_combination(&coeffs))
                })
                .collect();
            out.sort();
            out
        };
        prop_assert_eq!(members(&s), members(&canon.space));
    }

    /// Weak symmetry of disjoint-support spans holds for every member.
    #[test]
    fn disjoint_ws_span_is_weakly_symmetric(n in 1usize..5, d in 0usize..4, pi in 0usize..3, seed in any::<u64>()) {
        let spec = gf([2u32, 3, 5][pi]);
        let d = d.min(n * (n + 1) / 2);
        let mut rng = SplitMix64::new(seed);
        let s = random_space(RandomKind::DisjointSupportWs, spec, n, d, &mut rng).unwrap();
        prop_assert!(s.validate_span(SPAN_CHECK_CAP).is_ok());
    }

    /// The symbolic determinant and Pfaffian evaluate to the direct values,
    /// and pf^2 = det as functions.
    #[test]
    fn symbolic_expansions_evaluate_correctly(n in 1usize..4, d in 0usize..3, seed in any::<u64>()) {
        let spec = gf(3);
        let ambient_alt = (2 * n) * (2 * n - 1) / 2;
        let d_alt = d.min(ambient_alt);
        let mut rng = SplitMix64::new(seed);
        let s = random_space(RandomKind::Alternating, spec, 2 * n, d_alt, &mut rng).unwrap();
        let f = pf_polynomial(&s).unwrap();
        let g = det_polynomial(&s).unwrap();
        let p = 3u64;
        let total = p.pow(d_alt as u32);
        for code in 0..total {
            let mut c = code;
            let point: Vec<_> = (0..d_alt)
                .map(|_| {
                    let v = spec.elem((c % p) as i64);
                    c /= p;
                    v
                })
                .collect();
            let member = s.member(&point);
            prop_assert_eq!(f.eval(&point), member.pfaffian_elimination().unwrap());
            prop_assert_eq!(g.eval(&point), member.det().unwrap());
            let fv = f.eval(&point);
            prop_assert_eq!(fv * fv, g.eval(&point));
        }
    }
}
