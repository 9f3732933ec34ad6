use super::validate::circle_group;
use super::{
    classify, euler_generator, trichotomy_classify, ActionSpec, CaseTag, CircleSpec, EulerClass, IntervalModel,
    IntervalSpec, MVClass, MVDegree, Side, TrichotomyReport,
};
use crate::algebra::linalg::Echelon;
use crate::algebra::{
    homogeneous_monomials, rat, series_from_shape, BaseRing, GradedPolynomial, PoincareSeries, PresentationShape, Rational,
};
use crate::error::CohomologyError;
use crate::groups::DihedralData;
use crate::invariants::{molien, InvariantRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    pub representative: Option<String>,
}

impl Generator {
    fn new(name: impl Into<String>, degree: usize, representative: impl ToString) -> Self {
        Generator {
            name: name.into(),
            degree,
            representative: Some(representative.to_string()),
        }
    }
}

/// A closed-form (or tabulated) description of the equivariant cohomology
/// ring, with its dimension series to the working truncation.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub spec: String,
    pub case: CaseTag,
    pub swapped: bool,
    pub generators: Vec<Generator>,
    pub relations: Vec<String>,
    pub shape: PresentationShape,
    pub series: PoincareSeries,
    pub sphere_degree: Option<usize>,
    pub dihedral: Option<DihedralData>,
    pub trichotomy: Option<TrichotomyReport>,
    pub euler: Vec<(Side, EulerClass)>,
}

impl RingPresentation {
    fn new(spec: &str, case: CaseTag, shape: PresentationShape, n: usize) -> Result<Self, CohomologyError> {
        Ok(RingPresentation {
            spec: spec.to_string(),
            case,
            swapped: false,
            generators: Vec::new(),
            relations: Vec::new(),
            series: series_from_shape(&shape, n)?,
            shape,
            sphere_degree: None,
            dihedral: None,
            trichotomy: None,
            euler: Vec::new(),
        })
    }
}

fn ring_generators(ring: &InvariantRing, prefix: &str, n: usize) -> Vec<Generator> {
    ring.minimal_generators(n)
        .into_iter()
        .enumerate()
        .map(|(i, (d, p))| Generator::new(format!("{prefix}{}", i + 1), d, p))
        .collect()
}

fn wrong_case(expected: CaseTag, found: CaseTag) -> CohomologyError {
    CohomologyError::WrongCase {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

fn leg_euler(model: &IntervalModel, side: Side, n: usize) -> Result<EulerClass, CohomologyError> {
    let leg = model.spec().leg(side);
    euler_generator(model.leg_ring(side), model.spec().h.rank, &leg.embedding, leg.sphere_dim, n)
}

/// Dispatch on [`classify`].
pub fn present(spec: &ActionSpec, n: usize) -> Result<RingPresentation, CohomologyError> {
    match spec {
        ActionSpec::Circle(c) => mapping_torus_presentation(c, n),
        ActionSpec::Interval(s) => match classify(spec).case {
            CaseTag::OddOdd => present_odd_odd(s, n),
            CaseTag::OddEven => present_odd_even(s, n),
            CaseTag::EvenEven => present_even_even(s, n),
            _ => present_generic(s, n),
        },
    }
}

/// One odd and one even leg: H*_{K₋} ⊕ e·H*_H[e] inside H*_H[e], with e
/// the Euler class of the odd leg (legs exchanged first if needed).
pub fn present_odd_even(spec: &IntervalSpec, n: usize) -> Result<RingPresentation, CohomologyError> {
    let c = classify(&ActionSpec::Interval(spec.clone()));
    if c.case != CaseTag::OddEven {
        return Err(wrong_case(CaseTag::OddEven, c.case));
    }
    let spec = if c.swapped { spec.swapped() } else { spec.clone() };
    let model = IntervalModel::new(spec.clone())?;
    let euler = leg_euler(&model, Side::Plus, n)?;
    let dm = spec.minus.sphere_dim;
    let p = find_outside_leg_image(&model, dm).ok_or_else(|| {
        CohomologyError::InvalidSpec(format!(
            "every invariant of H in degree {dm} comes from {}",
            spec.minus.group.name
        ))
    })?;
    let shape = PresentationShape::EvenLegPlusEulerIdeal {
        even_leg: BaseRing::Series(molien(model.leg_ring(Side::Minus).group(), n)),
        base: BaseRing::Series(molien(model.h_ring().group(), n)),
        euler_degree: euler.degree,
    };
    let mut out = RingPresentation::new(&spec.name, CaseTag::OddEven, shape, n)?;
    out.swapped = c.swapped;
    out.generators = ring_generators(model.leg_ring(Side::Minus), "a", n);
    out.generators.push(Generator::new("e", euler.degree, &euler.e));
    out.generators
        .push(Generator::new("f", euler.degree + dm, format!("e*({p})")));
    out.relations = vec![
        format!("e restricts to 0 on {}", spec.h.name),
        format!("f^2 = e^2 * ({})", p.mul(&p)),
        format!("a_i act on e, f through {} -> {}", spec.minus.group.name, spec.h.name),
    ];
    out.euler = vec![(Side::Plus, euler)];
    Ok(out)
}

/// First H-invariant of degree `d` outside ρ*₋(H*_{K₋}).
fn find_outside_leg_image(model: &IntervalModel, d: usize) -> Option<GradedPolynomial> {
    let monos = homogeneous_monomials(model.spec().h.rank, d);
    let zero = rat(0);
    let mut image = Echelon::empty(monos.len());
    for b in model.leg_ring(Side::Minus).invariant_basis(d).iter() {
        image.insert(&model.restrict(Side::Minus, b).to_vector(&monos, &zero));
    }
    model
        .h_ring()
        .invariant_basis(d)
        .iter()
        .find(|b| !image.contains(&b.to_vector(&monos, &zero)))
        .cloned()
}

/// Two odd legs: H*_H[e₋, e₊]/(e₋e₊).
pub fn present_odd_odd(spec: &IntervalSpec, n: usize) -> Result<RingPresentation, CohomologyError> {
    let c = classify(&ActionSpec::Interval(spec.clone()));
    if c.case != CaseTag::OddOdd {
        return Err(wrong_case(CaseTag::OddOdd, c.case));
    }
    let model = IntervalModel::new(spec.clone())?;
    let em = leg_euler(&model, Side::Minus, n)?;
    let ep = leg_euler(&model, Side::Plus, n)?;
    let shape = PresentationShape::TwoNilpotents {
        base: BaseRing::Series(molien(model.h_ring().group(), n)),
        minus_degree: em.degree,
        plus_degree: ep.degree,
    };
    let mut out = RingPresentation::new(&spec.name, CaseTag::OddOdd, shape, n)?;
    for (i, (d, h)) in model.h_ring().minimal_generators(n).into_iter().enumerate() {
        let rep = match (model.lift(Side::Minus, &h), model.lift(Side::Plus, &h)) {
            (Some(a), Some(b)) => format!("({a}, {b})"),
            _ => h.to_string(),
        };
        out.generators.push(Generator::new(format!("h{}", i + 1), d, rep));
    }
    let zm = GradedPolynomial::zero(spec.minus.group.rank);
    let zp = GradedPolynomial::zero(spec.plus.group.rank);
    out.generators
        .push(Generator::new("e-", em.degree, format!("({}, {zp})", em.e)));
    out.generators
        .push(Generator::new("e+", ep.degree, format!("({zm}, {})", ep.e)));
    out.relations = vec!["e- * e+ = 0".into()];
    out.euler = vec![(Side::Minus, em), (Side::Plus, ep)];
    Ok(out)
}

/// Two even, orientable legs: (H*_S)^Ξ ⊗ H*(S^{k(n₋+n₊)+1}).
pub fn present_even_even(spec: &IntervalSpec, n: usize) -> Result<RingPresentation, CohomologyError> {
    let c = classify(&ActionSpec::Interval(spec.clone()));
    let dd = match (c.case, c.dihedral) {
        (CaseTag::EvenEven, Some(dd)) => dd,
        (case, _) => return Err(wrong_case(CaseTag::EvenEven, case)),
    };
    let tri = trichotomy_classify(spec, &dd, n)?;
    let sphere_degree = dd.k * (tri.n_minus + tri.n_plus) + 1;
    let xi = InvariantRing::new(dd.xi.clone());
    let shape = PresentationShape::TensorExterior {
        base: BaseRing::Series(molien(xi.group(), n)),
        sphere_degree,
    };
    let mut out = RingPresentation::new(&spec.name, CaseTag::EvenEven, shape, n)?;
    out.generators = ring_generators(&xi, "a", n);
    out.generators.push(Generator {
        name: "z".into(),
        degree: sphere_degree,
        representative: None,
    });
    out.relations = vec!["z^2 = 0".into()];
    out.sphere_degree = Some(sphere_degree);
    out.dihedral = Some(dd);
    out.trichotomy = Some(tri);
    Ok(out)
}

/// Classes of `basis` not in the span of `known`, greedily in order; the
/// accepted ones are added to `known`.
fn greedy_new(model: &IntervalModel, known: &mut Echelon<Rational>, basis: &[MVClass]) -> Vec<MVClass> {
    basis
        .iter()
        .filter(|b| known.insert(&model.coordinates(b)))
        .cloned()
        .collect()
}

/// The Mayer–Vietoris answer tabulated degreewise, with algebra generators
/// of the even part and module generators of the odd part.
pub fn present_generic(spec: &IntervalSpec, n: usize) -> Result<RingPresentation, CohomologyError> {
    let model = IntervalModel::new(spec.clone())?;
    let degrees: Vec<MVDegree> = (0..=n).map(|d| model.mv_degree(d)).collect();
    let even = PoincareSeries::from_dims(&degrees.iter().map(|m| m.even.len()).collect::<Vec<_>>());
    let odd = PoincareSeries::from_dims(&degrees.iter().map(|m| m.odd.len()).collect::<Vec<_>>());
    let shape = PresentationShape::FiberProductGeneric { even, odd };
    let mut out = RingPresentation::new(&spec.name, CaseTag::GenericMV, shape, n)?;

    let mut even_gens: Vec<MVClass> = Vec::new();
    let mut odd_gens: Vec<MVClass> = Vec::new();
    for d in 1..=n {
        let deg = &degrees[d];
        let width = if d % 2 == 0 { &deg.even } else { &deg.odd };
        let Some(first) = width.first() else { continue };
        let mut span = Echelon::empty(model.coordinates(first).len());
        let gens = if d % 2 == 0 { &even_gens } else { &odd_gens };
        for g in gens {
            for a in &degrees[d - g.degree()].even {
                span.insert(&model.coordinates(&model.mv_multiply(a, g)));
            }
        }
        let new = greedy_new(&model, &mut span, width);
        if d % 2 == 0 {
            even_gens.extend(new);
        } else {
            odd_gens.extend(new);
        }
    }
    for (i, g) in even_gens.iter().enumerate() {
        out.generators.push(Generator::new(format!("a{}", i + 1), g.degree(), g));
    }
    for (i, g) in odd_gens.iter().enumerate() {
        out.generators.push(Generator::new(format!("b{}", i + 1), g.degree(), g));
    }
    out.relations = vec![
        "odd * odd = 0".into(),
        "b_i generate the odd part as a module over the even part".into(),
    ];
    Ok(out)
}

/// Circle orbit space: H*(BK)^{⟨translation⟩} ⊗ H*(S¹).
pub fn mapping_torus_presentation(spec: &CircleSpec, n: usize) -> Result<RingPresentation, CohomologyError> {
    let group = circle_group(spec)?;
    let ring = InvariantRing::new(group);
    let shape = PresentationShape::TensorExterior {
        base: BaseRing::Series(molien(ring.group(), n)),
        sphere_degree: 1,
    };
    let mut out = RingPresentation::new(&spec.name, CaseTag::Circle, shape, n)?;
    out.generators = ring_generators(&ring, "a", n);
    out.generators.push(Generator {
        name: "s".into(),
        degree: 1,
        representative: None,
    });
    out.relations = vec!["s^2 = 0".into()];
    out.sphere_degree = Some(1);
    Ok(out)
}
