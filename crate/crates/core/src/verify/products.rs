use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SpotCheck;
use crate::algebra::{rat, GradedPolynomial};
use crate::cohomology::{ActionSpec, CaseTag, CircleSpec, IntervalModel, MVClass, RingPresentation, Side};
use crate::groups::{close_group, DEFAULT_CAP};
use crate::invariants::InvariantRing;

fn check(kind: &str, trial: usize, inputs: String, output: String, passed: bool) -> SpotCheck {
    SpotCheck {
        kind: kind.into(),
        trial,
        inputs,
        output,
        passed,
    }
}

/// Random small-integer combination of one degree's basis.
fn random_element<T: Clone>(
    rng: &mut ChaCha8Rng,
    bases: &[(usize, Vec<T>)],
    add: impl Fn(&T, &T) -> T,
    scale: impl Fn(&T, i64) -> T,
) -> Option<(usize, T)> {
    if bases.is_empty() {
        return None;
    }
    let (d, basis) = &bases[rng.gen_range(0..bases.len())];
    let mut acc = scale(&basis[0], rng.gen_range(-3..=3));
    for b in &basis[1..] {
        acc = add(&acc, &scale(b, rng.gen_range(-3..=3)));
    }
    Some((*d, acc))
}

/// Seeded random checks of the product laws: associativity, the unit,
/// closure of the even part, bilinearity of the module action and
/// odd·odd = 0.
pub fn product_spotchecks(
    spec: &ActionSpec,
    presentation: &RingPresentation,
    n: usize,
    trials: usize,
    seed: u64,
) -> Vec<SpotCheck> {
    match spec {
        ActionSpec::Interval(s) => match IntervalModel::new(s.clone()) {
            Ok(model) => interval_checks(&model, presentation, n, trials, seed),
            Err(e) => vec![check("model", 0, String::new(), e.to_string(), false)],
        },
        ActionSpec::Circle(c) => circle_checks(c, n, trials, seed),
    }
}

fn interval_checks(
    model: &IntervalModel,
    presentation: &RingPresentation,
    n: usize,
    trials: usize,
    seed: u64,
) -> Vec<SpotCheck> {
    let half = n / 2;
    let mut even: Vec<(usize, Vec<MVClass>)> = Vec::new();
    let mut odd: Vec<(usize, Vec<MVClass>)> = Vec::new();
    for d in 0..=half {
        let m = model.mv_degree(d);
        if !m.even.is_empty() {
            even.push((d, m.even));
        }
        if !m.odd.is_empty() {
            odd.push((d, m.odd));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let add = |a: &MVClass, b: &MVClass| model.add(a, b);
    let scale = |a: &MVClass, c: i64| model.scale(a, &rat(c));
    let mut out = Vec::new();
    for t in 0..trials {
        let (da, a) = random_element(&mut rng, &even, add, scale).expect("degree 0 is never empty");
        let (db, b) = random_element(&mut rng, &even, add, scale).expect("degree 0 is never empty");
        let ab = model.mv_multiply(&a, &b);
        out.push(check(
            "closure",
            t,
            format!("even {da} * even {db}"),
            format!("degree {}", ab.degree()),
            model.is_valid(&ab),
        ));

        let pool = if odd.is_empty() || rng.gen_bool(0.5) { &even } else { &odd };
        let (dc, c) = random_element(&mut rng, pool, add, scale).expect("nonempty pool");
        let parity = if c.is_even() { "even" } else { "odd" };
        let left = model.mv_multiply(&ab, &c);
        let right = model.mv_multiply(&a, &model.mv_multiply(&b, &c));
        out.push(check(
            "associativity",
            t,
            format!("even {da} * even {db} * {parity} {dc}"),
            format!("degree {}", left.degree()),
            left == right,
        ));
        out.push(check(
            "unit",
            t,
            format!("1 * {parity} {dc}"),
            format!("degree {dc}"),
            model.mv_multiply(&model.unit(), &c) == c,
        ));

        // (a + a')·c = a·c + a'·c with a' of the same degree as a
        let same: Vec<(usize, Vec<MVClass>)> = even.iter().filter(|(d, _)| *d == da).cloned().collect();
        let (_, a2) = random_element(&mut rng, &same, add, scale).expect("degree of a");
        let lhs = model.mv_multiply(&model.add(&a, &a2), &c);
        let rhs = model.add(&model.mv_multiply(&a, &c), &model.mv_multiply(&a2, &c));
        out.push(check(
            "bilinearity",
            t,
            format!("(even {da} + even {da}) * {parity} {dc}"),
            format!("degree {}", lhs.degree()),
            lhs == rhs,
        ));

        match (
            random_element(&mut rng, &odd, add, scale),
            random_element(&mut rng, &odd, add, scale),
        ) {
            (Some((dp, p)), Some((dq, q))) => {
                let pq = model.mv_multiply(&p, &q);
                out.push(check(
                    "odd-odd",
                    t,
                    format!("odd {dp} * odd {dq}"),
                    if pq.is_zero() { "0".into() } else { pq.to_string() },
                    pq.is_zero() && pq.is_even(),
                ));
            }
            _ if t == 0 => out.push(check(
                "odd-odd",
                t,
                format!("no odd classes up to degree {half}"),
                "vacuous".into(),
                true,
            )),
            _ => {}
        }
    }

    if presentation.case == CaseTag::OddOdd {
        let get = |side: Side| presentation.euler.iter().find(|(s, _)| *s == side).map(|(_, e)| e.clone());
        if let (Some(em), Some(ep)) = (get(Side::Minus), get(Side::Plus)) {
            let spec = model.spec();
            let cm = MVClass::Even {
                degree: em.degree,
                minus: em.e.clone(),
                plus: GradedPolynomial::zero(spec.plus.group.rank),
            };
            let cp = MVClass::Even {
                degree: ep.degree,
                minus: GradedPolynomial::zero(spec.minus.group.rank),
                plus: ep.e.clone(),
            };
            let prod = model.mv_multiply(&cm, &cp);
            out.push(check(
                "relation e- e+",
                0,
                format!("{cm} * {cp}"),
                prod.to_string(),
                model.is_valid(&cm) && model.is_valid(&cp) && !cm.is_zero() && !cp.is_zero() && prod.is_zero(),
            ));
        }
    }
    out
}

/// a + s·b with a, b invariants of the extended Weyl group and s² = 0.
#[derive(Clone, Debug, PartialEq)]
struct CircleClass {
    degree: usize,
    a: GradedPolynomial,
    b: GradedPolynomial,
}

impl CircleClass {
    fn mul(&self, o: &CircleClass) -> CircleClass {
        CircleClass {
            degree: self.degree + o.degree,
            a: self.a.mul(&o.a),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.a)),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

fn circle_checks(spec: &CircleSpec, n: usize, trials: usize, seed: u64) -> Vec<SpotCheck> {
    let mut gens = spec.k.weyl.generators().to_vec();
    gens.push(spec.translation.clone());
    let ring = match close_group(spec.k.rank, &gens, DEFAULT_CAP) {
        Ok(g) => InvariantRing::new(g),
        Err(e) => return vec![check("model", 0, String::new(), e.to_string(), false)],
    };
    let r = spec.k.rank;
    let zero = GradedPolynomial::zero(r);
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for d in (0..=n / 2).step_by(2) {
        let basis = ring.invariant_basis(d);
        if basis.is_empty() {
            continue;
        }
        let a: Vec<CircleClass> = basis
            .iter()
            .map(|p| CircleClass {
                degree: d,
                a: p.clone(),
                b: zero.clone(),
            })
            .collect();
        let b: Vec<CircleClass> = basis
            .iter()
            .map(|p| CircleClass {
                degree: d + 1,
                a: zero.clone(),
                b: p.clone(),
            })
            .collect();
        even.push((d, a));
        if d < n / 2 {
            odd.push((d + 1, b));
        }
    }
    let add = |x: &CircleClass, y: &CircleClass| CircleClass {
        degree: x.degree,
        a: x.a.add(&y.a),
        b: x.b.add(&y.b),
    };
    let scale = |x: &CircleClass, c: i64| CircleClass {
        degree: x.degree,
        a: x.a.scale(&rat(c)),
        b: x.b.scale(&rat(c)),
    };
    let unit = CircleClass {
        degree: 0,
        a: GradedPolynomial::constant(r, rat(1)),
        b: zero.clone(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all = even.clone();
    all.extend(odd.iter().cloned());
    let mut out = Vec::new();
    for t in 0..trials {
        let (dx, x) = random_element(&mut rng, &all, add, scale).expect("degree 0");
        let (dy, y) = random_element(&mut rng, &all, add, scale).expect("degree 0");
        let (dz, z) = random_element(&mut rng, &all, add, scale).expect("degree 0");
        let xy = x.mul(&y);
        out.push(check(
            "closure",
            t,
            format!("{dx} * {dy}"),
            format!("degree {}", xy.degree),
            ring.is_invariant(&xy.a) && ring.is_invariant(&xy.b),
        ));
        out.push(check(
            "associativity",
            t,
            format!("{dx} * {dy} * {dz}"),
            format!("degree {}", xy.degree + dz),
            xy.mul(&z) == x.mul(&y.mul(&z)),
        ));
        out.push(check("unit", t, format!("1 * {dx}"), format!("degree {dx}"), unit.mul(&x) == x));
        if let (Some((dp, p)), Some((dq, q))) = (
            random_element(&mut rng, &odd, add, scale),
            random_element(&mut rng, &odd, add, scale),
        ) {
            let pq = p.mul(&q);
            out.push(check(
                "odd-odd",
                t,
                format!("odd {dp} * odd {dq}"),
                if pq.is_zero() { "0".into() } else { format!("{} + s*({})", pq.a, pq.b) },
                pq.is_zero(),
            ));
        }
    }
    out
}
