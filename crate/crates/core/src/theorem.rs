//! The polynomial-method core: restriction of a space to a matching, symbolic
//! determinant/Pfaffian polynomials, the two coefficient checks, and the
//! grid witness searches that certify max-rank lower bounds.

use itertools::Itertools;

use thiserror::Error;

use crate::field::FieldElem;
use crate::graph::Matching;
use crate::matrix::{matching_sign, perfect_matchings, Matrix, MatrixError};
use crate::poly::Polynomial;
use crate::space::{colex_cmp, leading_cell, AffineSpace, SpaceError, SpaceKind, SPAN_CHECK_CAP};

/// Cost guard for the symbolic Leibniz expansion (m! permutations).
pub const MAX_DET_EXPANSION_ORDER: usize = 7;
/// Cost guard for the symbolic Pfaffian expansion ((m-1)!! matchings).
pub const MAX_PF_EXPANSION_ORDER: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("the witness search over weakly symmetric spaces requires |F| >= 3, got p = {0}")]
    FieldTooSmall(u16),
    #[error("hypothesis violation: {what}")]
    HypothesisViolation { what: String, space_text: String },
    #[error("order {n} exceeds the symbolic expansion bound {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("no generator with leading edge matching {edge} (is the space canonical?)")]
    EdgeWithoutGenerator { edge: String },
    #[error("exhausted the witness grid without a nonzero evaluation; this contradicts the coefficient bound")]
    GridExhausted { space_text: String },
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A matching in the leading graph together with, per edge, the canonical
/// basis generator whose folded leading cell is that edge, and the edge size
/// delta (1 for a loop, 2 for a pair). Edges are kept in increasing colex
/// order of their cells.
#[derive(Clone, Debug)]
pub struct MatchingSelection {
    pub matching: Matching,
    pub chosen: Vec<usize>,
    pub deltas: Vec<u8>,
}

impl MatchingSelection {
    /// Builds the selection for a canonical space. Every matching edge must
    /// be the folded leading cell of exactly one basis generator.
    pub fn for_canonical(space: &AffineSpace, matching: &Matching) -> Result<MatchingSelection, TheoremError> {
        let cells = space.leading_cells()?;
        let mut order: Vec<usize> = (0..matching.size()).collect();
        let edge_cells: Vec<_> = matching
            .edges()
            .iter()
            .map(|e| crate::space::Cell::new(e.lo(), e.hi()))
            .collect();
        order.sort_by(|&a, &b| colex_cmp(edge_cells[a], edge_cells[b]));
        let mut chosen = Vec::with_capacity(matching.size());
        let mut deltas = Vec::with_capacity(matching.size());
        let mut edges_sorted = Vec::with_capacity(matching.size());
        for &r in &order {
            let edge = matching.edges()[r];
            let idx = cells
                .iter()
                .position(|c| c.folded() == edge)
                .ok_or_else(|| TheoremError::EdgeWithoutGenerator { edge: edge.to_string() })?;
            chosen.push(idx);
            deltas.push(edge.size() as u8);
            edges_sorted.push(edge);
        }
        let matching = Matching::new(edges_sorted).expect("a matching stays a matching");
        Ok(MatchingSelection { matching, chosen, deltas })
    }

    pub fn size(&self) -> usize {
        self.chosen.len()
    }

    /// Total vertices covered, sum of the deltas.
    pub fn weight(&self) -> usize {
        self.deltas.iter().map(|&d| d as usize).sum()
    }
}

/// A space restricted to the vertex set of a matching selection: base and
/// chosen generators cut down to the principal submatrix on those vertices.
/// The selection's matching is perfect on the restriction.
#[derive(Clone, Debug)]
pub struct RestrictedSpace {
    pub space: AffineSpace,
    /// The original 1-based vertices, ascending; position r is the restricted
    /// label r+1.
    pub vertices: Vec<usize>,
}

/// Restricts a canonical space to the vertices covered by the selection,
/// keeping only the chosen generators (in selection order).
pub fn restrict(space: &AffineSpace, sel: &MatchingSelection) -> Result<RestrictedSpace, TheoremError> {
    let vertices = sel.matching.covered_vertices();
    let idx: Vec<usize> = vertices.iter().map(|v| v - 1).collect();
    let base = space.base().principal_submatrix(&idx)?;
    let basis: Vec<Matrix> = sel
        .chosen
        .iter()
        .map(|&r| space.basis()[r].principal_submatrix(&idx))
        .collect::<Result<_, _>>()?;
    let restricted = AffineSpace::new(space.kind(), base, basis)?;
    Ok(RestrictedSpace { space: restricted, vertices })
}

/// Entry (r, c) of `A + sum x_i B_i` as an affine linear form, or None when
/// identically zero.
fn linear_forms(space: &AffineSpace) -> Vec<Vec<Option<Polynomial>>> {
    let spec = space.spec();
    let m = space.n();
    let t = space.dim();
    let mut forms = Vec::with_capacity(m);
    for r in 0..m {
        let mut row = Vec::with_capacity(m);
        for c in 0..m {
            let constant = space.base().get(r, c);
            let coeffs: Vec<FieldElem> = space.basis().iter().map(|b| b.get(r, c)).collect();
            if constant.is_zero() && coeffs.iter().all(|v| v.is_zero()) {
                row.push(None);
            } else {
                row.push(Some(Polynomial::linear(spec, t, constant, &coeffs)));
            }
        }
        forms.push(row);
    }
    forms
}

/// det(A + sum x_i B_i) by symbolic Leibniz expansion over permutations.
/// Intended for restricted spaces of order at most 7.
pub fn det_polynomial(space: &AffineSpace) -> Result<Polynomial, TheoremError> {
    let m = space.n();
    if m > MAX_DET_EXPANSION_ORDER {
        return Err(TheoremError::OrderTooLarge { n: m, max: MAX_DET_EXPANSION_ORDER });
    }
    let spec = space.spec();
    let t = space.dim();
    let forms = linear_forms(space);
    let mut f = Polynomial::zero(spec, t);
    'perms: for perm in (0..m).permutations(m) {
        let mut prod = Polynomial::constant(spec, t, spec.one());
        for (r, &c) in perm.iter().enumerate() {
            match &forms[r][c] {
                None => continue 'perms,
                Some(form) => prod = prod.mul(form),
            }
        }
        if crate::matrix::permutation_sign(&perm) < 0 {
            prod = prod.scale(-spec.one());
        }
        f = f.add(&prod);
    }
    Ok(f)
}

/// pf(A + sum x_i B_i) by expansion over perfect matchings. The space must be
/// alternating of even order at most 10.
pub fn pf_polynomial(space: &AffineSpace) -> Result<Polynomial, TheoremError> {
    let m = space.n();
    if m > MAX_PF_EXPANSION_ORDER {
        return Err(TheoremError::OrderTooLarge { n: m, max: MAX_PF_EXPANSION_ORDER });
    }
    if m % 2 != 0 {
        return Err(TheoremError::Matrix(MatrixError::OddOrder(m)));
    }
    ensure_alternating_space(space)?;
    let spec = space.spec();
    let t = space.dim();
    let forms = linear_forms(space);
    let mut f = Polynomial::zero(spec, t);
    'matchings: for matching in perfect_matchings(m) {
        let mut prod = Polynomial::constant(spec, t, spec.one());
        for &(a, b) in &matching {
            match &forms[a][b] {
                None => continue 'matchings,
                Some(form) => prod = prod.mul(form),
            }
        }
        if matching_sign(&matching) < 0 {
            prod = prod.scale(-spec.one());
        }
        f = f.add(&prod);
    }
    Ok(f)
}

fn ensure_alternating_space(space: &AffineSpace) -> Result<(), TheoremError> {
    let mut ok = space.base().is_alternating()?;
    for b in space.basis() {
        ok = ok && b.is_alternating()?;
    }
    if ok {
        Ok(())
    } else {
        Err(TheoremError::HypothesisViolation {
            what: "the space is not contained in the alternating matrices".into(),
            space_text: space.serialize(),
        })
    }
}

/// Coefficient of `prod x_i^{delta_i}` in the determinant polynomial of the
/// restriction; nonzero whenever the hypotheses hold.
pub fn coeff_check_prop1(space: &AffineSpace, sel: &MatchingSelection) -> Result<FieldElem, TheoremError> {
    let restricted = restrict(space, sel)?;
    debug_assert_eq!(sel.weight(), restricted.space.n(), "the matching is perfect on the restriction");
    let f = det_polynomial(&restricted.space)?;
    let exps: Vec<u32> = sel.deltas.iter().map(|&d| d as u32).collect();
    Ok(f.coefficient(&exps))
}

/// Result of the Pfaffian coefficient check: the extracted coefficient of
/// `x_1 ... x_t` and its closed form, the matching sign times the product of
/// leading entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfCoeff {
    pub coefficient: FieldElem,
    pub closed_form: FieldElem,
    /// Position j of the sorted basis holds selection generator `order[j]`;
    /// the sort puts leading cells in increasing colex order.
    pub order: Vec<usize>,
}

/// Coefficient of `x_1 ... x_t` in the Pfaffian polynomial of the
/// restriction, with generators sorted by leading cell in colex order, plus
/// its closed form.
pub fn coeff_check_pf(space: &AffineSpace, sel: &MatchingSelection) -> Result<PfCoeff, TheoremError> {
    let restricted = restrict(space, sel)?;
    let spec = space.spec();
    let m = restricted.space.n();
    // Order generators by leading cell, ascending colex, in restricted labels.
    let mut cells = Vec::with_capacity(restricted.space.dim());
    for b in restricted.space.basis() {
        cells.push(leading_cell(b)?);
    }
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by(|&a, &b| colex_cmp(cells[a], cells[b]));
    let sorted = AffineSpace::new(
        restricted.space.kind(),
        restricted.space.base().clone(),
        order.iter().map(|&i| restricted.space.basis()[i].clone()).collect(),
    )?;

    let f = pf_polynomial(&sorted)?;
    let t = sorted.dim();
    let coefficient = f.coefficient(&vec![1u32; t]);

    // Closed form: sign of the matching of leading cells times the product of
    // leading entries.
    let pairs: Vec<(usize, usize)> =
        order.iter().map(|&i| (cells[i].i() - 1, cells[i].j() - 1)).collect();
    debug_assert_eq!(2 * pairs.len(), m, "leading cells form a perfect matching");
    let mut closed = spec.one();
    for (j, &(a, b)) in pairs.iter().enumerate() {
        closed = closed * sorted.basis()[j].get(a, b);
    }
    if matching_sign(&pairs) < 0 {
        closed = -closed;
    }
    Ok(PfCoeff { coefficient, closed_form: closed, order })
}

/// A successful witness search: the grid point, the full-space member it
/// selects, that member's rank, and the number of grid evaluations used.
#[derive(Clone, Debug)]
pub struct WitnessResult {
    pub point: Vec<FieldElem>,
    /// Indices into the canonical basis matching `point` position-wise.
    pub chosen: Vec<usize>,
    pub member: Matrix,
    pub achieved_rank: usize,
    pub search_size: u64,
}

fn full_member(space: &AffineSpace, chosen: &[usize], point: &[FieldElem]) -> Matrix {
    let mut coeffs = vec![space.spec().zero(); space.dim()];
    for (&idx, &v) in chosen.iter().zip(point) {
        coeffs[idx] = v;
    }
    space.member(&coeffs)
}

/// Grid search certifying rank >= mu(G_S) for a space with weakly symmetric
/// linear part over a field with at least 3 elements.
///
/// Restricts to a mu-maximum matching and scans the grid with coordinate i
/// ranging over the first delta_i + 1 field elements, in lexicographic
/// order, until the restricted determinant is nonzero.
pub fn witness_search_ws(space: &AffineSpace, span_cap: u64) -> Result<WitnessResult, TheoremError> {
    let spec = space.spec();
    if spec.p() < 3 {
        return Err(TheoremError::FieldTooSmall(spec.p()));
    }
    if space.kind() == SpaceKind::General {
        return Err(TheoremError::HypothesisViolation {
            what: "the linear part carries no weak-symmetry guarantee (kind 'general')".into(),
            space_text: space.serialize(),
        });
    }
    space.validate_span(span_cap).map_err(|e| match e {
        SpaceError::SpanUnverifiable { .. } | SpaceError::SpanViolation { .. } => {
            TheoremError::HypothesisViolation { what: e.to_string(), space_text: space.serialize() }
        }
        other => TheoremError::Space(other),
    })?;

    let canonical = space.canonicalize()?.space;
    let graph = canonical.leading_graph()?;
    let matching = graph.max_matching_witness();
    if matching.size() == 0 {
        let member = canonical.base().clone();
        let achieved_rank = member.rank();
        return Ok(WitnessResult { point: vec![], chosen: vec![], member, achieved_rank, search_size: 1 });
    }
    let sel = MatchingSelection::for_canonical(&canonical, &matching)?;
    let restricted = restrict(&canonical, &sel)?;
    let ranges: Vec<u16> = sel.deltas.iter().map(|&d| d as u16 + 1).collect();
    for (idx, point) in lex_grid(spec.p(), &ranges).enumerate() {
        let search_size = idx as u64 + 1;
        let coeffs: Vec<FieldElem> = point.iter().map(|&v| spec.elem(v as i64)).collect();
        let member = restricted.space.member(&coeffs);
        if !member.det()?.is_zero() {
            let member = full_member(&canonical, &sel.chosen, &coeffs);
            let achieved_rank = member.rank();
            return Ok(WitnessResult {
                point: coeffs,
                chosen: sel.chosen.clone(),
                member,
                achieved_rank,
                search_size,
            });
        }
    }
    Err(TheoremError::GridExhausted { space_text: space.serialize() })
}

/// Grid search certifying rank >= mu(G_S) for an affine space of alternating
/// matrices over any field; the grid is {0,1}^t and the restricted Pfaffian
/// is the nonzero test.
pub fn witness_search_alt(space: &AffineSpace) -> Result<WitnessResult, TheoremError> {
    let spec = space.spec();
    if space.kind() != SpaceKind::Alternating {
        return Err(TheoremError::HypothesisViolation {
            what: format!("expected an alternating-kind space, got '{}'", space.kind()),
            space_text: space.serialize(),
        });
    }
    ensure_alternating_space(space)?;

    let canonical = space.canonicalize()?.space;
    let graph = canonical.leading_graph()?;
    let matching = graph.max_matching_witness();
    if matching.size() == 0 {
        let member = canonical.base().clone();
        let achieved_rank = member.rank();
        return Ok(WitnessResult { point: vec![], chosen: vec![], member, achieved_rank, search_size: 1 });
    }
    let sel = MatchingSelection::for_canonical(&canonical, &matching)?;
    let restricted = restrict(&canonical, &sel)?;
    let ranges: Vec<u16> = vec![2; sel.size()];
    for (idx, point) in lex_grid(spec.p(), &ranges).enumerate() {
        let search_size = idx as u64 + 1;
        let coeffs: Vec<FieldElem> = point.iter().map(|&v| spec.elem(v as i64)).collect();
        let member = restricted.space.member(&coeffs);
        if !member.pfaffian_elimination()?.is_zero() {
            let member = full_member(&canonical, &sel.chosen, &coeffs);
            let achieved_rank = member.rank();
            return Ok(WitnessResult {
                point: coeffs,
                chosen: sel.chosen.clone(),
                member,
                achieved_rank,
                search_size,
            });
        }
    }
    Err(TheoremError::GridExhausted { space_text: space.serialize() })
}

/// Validates a weakly symmetric span with the default cap.
pub fn witness_search_ws_default(space: &AffineSpace) -> Result<WitnessResult, TheoremError> {
    witness_search_ws(space, SPAN_CHECK_CAP)
}

/// Lexicographic enumeration of the grid with per-coordinate sizes
/// `ranges[i]` (clamped to p), first coordinate most significant.
fn lex_grid(p: u16, ranges: &[u16]) -> impl Iterator<Item = Vec<u16>> + '_ {
    let sizes: Vec<u16> = ranges.iter().map(|&r| r.min(p)).collect();
    let total: u64 = sizes.iter().map(|&s| s as u64).product();
    (0..total).map(move |mut code| {
        let mut point = vec![0u16; sizes.len()];
        for i in (0..sizes.len()).rev() {
            point[i] = (code % sizes[i] as u64) as u16;
            code /= sizes[i] as u64;
        }
        point
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::graph::Edge;
    use crate::rng::SplitMix64;
    use crate::space::{random_space, RandomKind};

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn m(spec: FieldSpec, rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(spec, rows).unwrap()
    }

    /// The 3x3 GF(3) space {[[x,x,0],[x,0,y],[0,y,y]]}, canonical.
    fn two_generator_space(spec: FieldSpec) -> AffineSpace {
        AffineSpace::new(
            SpaceKind::Symmetric,
            Matrix::zero(spec, 3, 3),
            vec![
                m(spec, &[vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]),
                m(spec, &[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]),
            ],
        )
        .unwrap()
    }

    fn full_matching_selection(space: &AffineSpace) -> MatchingSelection {
        let canonical = space.canonicalize().unwrap().space;
        let graph = canonical.leading_graph().unwrap();
        MatchingSelection::for_canonical(&canonical, &graph.max_matching_witness()).unwrap()
    }

    #[test]
    fn det_polynomial_of_two_generator_space() {
        let spec = gf(3);
        let s = two_generator_space(spec);
        let sel = full_matching_selection(&s);
        assert_eq!(sel.deltas, vec![2, 1]);
        let restricted = restrict(&s, &sel).unwrap();
        assert_eq!(restricted.vertices, vec![1, 2, 3]);
        let f = det_polynomial(&restricted.space).unwrap();
        // det [[x,x,0],[x,0,y],[0,y,y]] = -x^2 y - x y^2 = 2x^2y + 2xy^2.
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coefficient(&[2, 1]).value(), 2);
        assert_eq!(f.coefficient(&[1, 2]).value(), 2);
    }

    #[test]
    fn det_polynomial_constant_space() {
        let spec = gf(5);
        let s = AffineSpace::new(SpaceKind::General, Matrix::identity(spec, 2), vec![]).unwrap();
        let f = det_polynomial(&s).unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coefficient(&[]).value(), 1);
    }

    #[test]
    fn symbolic_expansions_enforce_order_bounds() {
        let spec = gf(5);
        let s8 = AffineSpace::new(SpaceKind::General, Matrix::identity(spec, 8), vec![]).unwrap();
        assert!(matches!(det_polynomial(&s8), Err(TheoremError::OrderTooLarge { n: 8, .. })));
        let s12 =
            AffineSpace::new(SpaceKind::Alternating, Matrix::zero(spec, 12, 12), vec![]).unwrap();
        assert!(matches!(pf_polynomial(&s12), Err(TheoremError::OrderTooLarge { n: 12, .. })));
    }

    #[test]
    fn det_polynomial_evaluation_matches_direct_det() {
        let spec = gf(5);
        let mut rng = SplitMix64::new(21);
        for _ in 0..10 {
            let s = random_space(RandomKind::Symmetric, spec, 3, 2, &mut rng).unwrap();
            let f = det_polynomial(&s).unwrap();
            for _ in 0..10 {
                let point: Vec<FieldElem> =
                    (0..2).map(|_| spec.elem(rng.below(5) as i64)).collect();
                assert_eq!(f.eval(&point), s.member(&point).det().unwrap());
            }
        }
    }

    #[test]
    fn pf_polynomial_examples() {
        let spec = gf(3);
        let sympl = m(spec, &[vec![0, 1], vec![-1, 0]]);
        // Base 0: f = x1.
        let s = AffineSpace::new(SpaceKind::Alternating, Matrix::zero(spec, 2, 2), vec![sympl.clone()])
            .unwrap();
        let f = pf_polynomial(&s).unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.coefficient(&[1]).value(), 1);

        // Base [[0,1],[-1,0]] over GF(2): f = 1 + x1.
        let spec2 = gf(2);
        let sympl2 = m(spec2, &[vec![0, 1], vec![1, 0]]);
        let s2 =
            AffineSpace::new(SpaceKind::Alternating, sympl2.clone(), vec![sympl2]).unwrap();
        let f2 = pf_polynomial(&s2).unwrap();
        assert_eq!(f2.coefficient(&[0]).value(), 1);
        assert_eq!(f2.coefficient(&[1]).value(), 1);
    }

    #[test]
    fn pf_polynomial_squares_to_det_polynomial_on_grid() {
        let mut rng = SplitMix64::new(33);
        for &p in &[2u32, 3] {
            let spec = gf(p);
            for _ in 0..10 {
                let s = random_space(RandomKind::Alternating, spec, 4, 2, &mut rng).unwrap();
                let f = pf_polynomial(&s).unwrap();
                let g = det_polynomial(&s).unwrap();
                // Functional identity f^2 = det on the whole grid.
                for a in spec.elements() {
                    for b in spec.elements() {
                        let fv = f.eval(&[a, b]);
                        assert_eq!(fv * fv, g.eval(&[a, b]));
                    }
                }
            }
        }
    }

    #[test]
    fn prop1_coefficient_examples() {
        let spec = gf(3);
        let s = two_generator_space(spec);
        let sel = full_matching_selection(&s);
        let c = coeff_check_prop1(&s, &sel).unwrap();
        assert_eq!(c.value(), 2);

        // t = 1, n = 1: f = A(1,1) + x, coefficient of x is 1.
        let s1 = AffineSpace::new(
            SpaceKind::Symmetric,
            m(spec, &[vec![2]]),
            vec![m(spec, &[vec![1]])],
        )
        .unwrap();
        let sel1 = full_matching_selection(&s1);
        assert_eq!(coeff_check_prop1(&s1, &sel1).unwrap().value(), 1);
    }

    #[test]
    fn pf_coefficient_examples() {
        let spec = gf(5);
        let sympl = m(spec, &[vec![0, 1], vec![-1, 0]]);
        let s = AffineSpace::new(SpaceKind::Alternating, Matrix::zero(spec, 2, 2), vec![sympl])
            .unwrap();
        let sel = full_matching_selection(&s);
        let pc = coeff_check_pf(&s, &sel).unwrap();
        assert_eq!(pc.coefficient.value(), 1);
        assert_eq!(pc.closed_form.value(), 1);

        // t = 2 with the two matching generators on {1,2} and {3,4}.
        let mut b1 = Matrix::zero(spec, 4, 4);
        b1.set(0, 1, spec.one());
        b1.set(1, 0, -spec.one());
        let mut b2 = Matrix::zero(spec, 4, 4);
        b2.set(2, 3, spec.one());
        b2.set(3, 2, -spec.one());
        let s2 = AffineSpace::new(SpaceKind::Alternating, Matrix::zero(spec, 4, 4), vec![b1, b2])
            .unwrap();
        let sel2 = full_matching_selection(&s2);
        let pc2 = coeff_check_pf(&s2, &sel2).unwrap();
        assert_eq!(pc2.coefficient.value(), 1);
        assert_eq!(pc2.closed_form.value(), 1);
    }

    #[test]
    fn ws_witness_on_two_generator_space() {
        let spec = gf(3);
        let s = two_generator_space(spec);
        let w = witness_search_ws(&s, SPAN_CHECK_CAP).unwrap();
        assert_eq!(w.achieved_rank, 3);
        // f(x,y) = 2x^2y + 2xy^2 vanishes on the grid until (1,1).
        assert_eq!(w.point.iter().map(|v| v.value()).collect::<Vec<_>>(), vec![1, 1]);
        assert!(w.search_size <= 6);
    }

    #[test]
    fn ws_witness_on_full_symmetric_space() {
        // The whole 6-dimensional symmetric space on 3 vertices has
        // G_S = K~_3, mu = 3, and contains the identity.
        let spec = gf(5);
        let mut rng = SplitMix64::new(1);
        let s = random_space(RandomKind::Symmetric, spec, 3, 6, &mut rng).unwrap();
        let w = witness_search_ws(&s, SPAN_CHECK_CAP).unwrap();
        assert_eq!(w.achieved_rank, 3);
        assert_eq!(s.max_rank_oracle(1 << 20).unwrap().0, 3);
    }

    #[test]
    fn alt_witness_on_full_alternating_space() {
        // The whole alternating space on 4 vertices: mu = 4, witness rank 4.
        let spec = gf(2);
        let mut rng = SplitMix64::new(2);
        let s = random_space(RandomKind::Alternating, spec, 4, 6, &mut rng).unwrap();
        assert_eq!(s.leading_graph().unwrap().mu(), 4);
        let w = witness_search_alt(&s).unwrap();
        assert_eq!(w.achieved_rank, 4);
    }

    #[test]
    fn ws_witness_d0_returns_base() {
        let spec = gf(5);
        let base = Matrix::identity(spec, 2);
        let s = AffineSpace::new(SpaceKind::Symmetric, base.clone(), vec![]).unwrap();
        let w = witness_search_ws(&s, SPAN_CHECK_CAP).unwrap();
        assert_eq!(w.member, base);
        assert_eq!(w.achieved_rank, 2);
    }

    #[test]
    fn ws_witness_rejects_gf2() {
        let spec = gf(2);
        let s = AffineSpace::new(SpaceKind::Symmetric, Matrix::zero(spec, 2, 2), vec![]).unwrap();
        assert!(matches!(
            witness_search_ws(&s, SPAN_CHECK_CAP),
            Err(TheoremError::FieldTooSmall(2))
        ));
    }

    #[test]
    fn alt_witness_examples() {
        // Base [[0,1],[1,0]] over GF(2), B1 the same: pf = 1 + eps, so the
        // witness is eps = 0.
        let spec = gf(2);
        let sympl = m(spec, &[vec![0, 1], vec![1, 0]]);
        let s = AffineSpace::new(SpaceKind::Alternating, sympl.clone(), vec![sympl.clone()]).unwrap();
        let w = witness_search_alt(&s).unwrap();
        assert_eq!(w.point.iter().map(|v| v.value()).collect::<Vec<_>>(), vec![0]);
        assert_eq!(w.achieved_rank, 2);
        assert_eq!(w.search_size, 1);

        // Base 0: eps = 1 is the first nonzero point.
        let s2 = AffineSpace::new(SpaceKind::Alternating, Matrix::zero(spec, 2, 2), vec![sympl])
            .unwrap();
        let w2 = witness_search_alt(&s2).unwrap();
        assert_eq!(w2.point.iter().map(|v| v.value()).collect::<Vec<_>>(), vec![1]);
        assert_eq!(w2.achieved_rank, 2);
    }

    #[test]
    fn selection_requires_canonical_edges() {
        let spec = gf(3);
        let s = two_generator_space(spec);
        let canonical = s.canonicalize().unwrap().space;
        let matching = Matching::new(vec![Edge::pair(1, 3)]).unwrap();
        assert!(matches!(
            MatchingSelection::for_canonical(&canonical, &matching),
            Err(TheoremError::EdgeWithoutGenerator { .. })
        ));
    }
}
