//! Componentwise right ideals of `U(sl2[t])` and their fusion.
//!
//! An ideal here is generated by the Lie subalgebra
//! `e (x) p_e C[t]  (+)  h (x) p_h C[t]  (+)  f (x) p_f C[t]`
//! for monic polynomials `p_e, p_h, p_f`. Closure under the bracket needs
//! `p_e p_f` to lie in `p_h C[t]` (the mixed conditions with `p_e` and
//! `p_f` hold automatically but are checked all the same). Fusion at
//! pairwise distinct points shifts each generator to its point and
//! intersects; for coprime shifts the intersection is the product.

use super::FusionError;
use crate::linalg::Rat;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Polynomial over the rationals, ascending coefficients, no trailing zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly {
            coeffs: vec![Rat::one()],
        }
    }

    /// The monomial `t^n`.
    pub fn t_power(n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        RatPoly { coeffs }
    }

    /// `t - z`.
    pub fn linear(z: &Rat) -> Self {
        RatPoly::new(vec![-z.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    /// Substitution `t -> t - z` by Horner evaluation.
    pub fn shift(&self, z: &Rat) -> RatPoly {
        let linear = RatPoly::linear(z);
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&linear);
            if !c.is_zero() {
                let mut coeffs = acc.coeffs;
                if coeffs.is_empty() {
                    coeffs.push(Rat::zero());
                }
                coeffs[0] += c;
                acc = RatPoly::new(coeffs);
            }
        }
        acc
    }

    /// Quotient and remainder; divisor must be non-zero.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot =
            vec![Rat::zero(); self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1];
        while rem.len() > dd {
            let rd = rem.len() - 1;
            let c = rem[rd].clone() / lead.clone();
            if !c.is_zero() {
                quot[rd - dd] = c.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let idx = rd - dd + i;
                    let sub = &c * b;
                    rem[idx] -= sub;
                }
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn divides(&self, other: &RatPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Leading monomial `t^deg` (used by the collision limit of ideals).
    pub fn top(&self) -> RatPoly {
        match self.degree() {
            Some(d) => RatPoly::t_power(d),
            None => RatPoly::zero(),
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if abs.is_one() && e > 0 {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{abs}{var}"));
            }
        }
        write!(f, "{out}")
    }
}

fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_from_value(v: &serde_json::Value) -> Result<Rat, String> {
    match v {
        serde_json::Value::String(s) => s
            .parse::<Rat>()
            .map_err(|e| format!("bad rational {s:?}: {e}")),
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|x| Rat::from_integer(x.into()))
            .ok_or_else(|| format!("bad rational {n}")),
        other => Err(format!("bad rational {other}")),
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs
            .iter()
            .map(rat_to_string)
            .collect::<Vec<_>>()
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<serde_json::Value>::deserialize(deserializer)?;
        let coeffs = values
            .iter()
            .map(|v| rat_from_value(v).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RatPoly::new(coeffs))
    }
}

/// The right ideal generated by `e (x) p_e C[t], h (x) p_h C[t],
/// f (x) p_f C[t]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentwiseIdeal {
    pub p_e: RatPoly,
    pub p_h: RatPoly,
    pub p_f: RatPoly,
}

impl ComponentwiseIdeal {
    /// Validates monicity of all three generators and the subalgebra
    /// condition.
    pub fn new(p_e: RatPoly, p_h: RatPoly, p_f: RatPoly) -> Result<Self, FusionError> {
        for (p, component) in [(&p_e, 'e'), (&p_h, 'h'), (&p_f, 'f')] {
            if !p.is_monic() {
                return Err(FusionError::NonMonicGenerator { component });
            }
        }
        let ideal = ComponentwiseIdeal { p_e, p_h, p_f };
        ideal.check_subalgebra()?;
        Ok(ideal)
    }

    fn check_subalgebra(&self) -> Result<(), FusionError> {
        let ef = self.p_e.mul(&self.p_f);
        let eh = self.p_e.mul(&self.p_h);
        let fh = self.p_f.mul(&self.p_h);
        if self.p_h.divides(&ef) && self.p_e.divides(&eh) && self.p_f.divides(&fh) {
            Ok(())
        } else {
            Err(FusionError::SubalgebraViolation)
        }
    }

    /// `B_M`: all three generators `t^M`.
    pub fn b_m(m: usize) -> Self {
        ComponentwiseIdeal {
            p_e: RatPoly::t_power(m),
            p_h: RatPoly::t_power(m),
            p_f: RatPoly::t_power(m),
        }
    }
}

impl fmt::Display for ComponentwiseIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(p_e = {}, p_h = {}, p_f = {})",
            self.p_e, self.p_h, self.p_f
        )
    }
}

/// Fusion of componentwise ideals at pairwise distinct points: each
/// generator becomes the product of the pointwise shifts
/// `prod_i p^{(i)}(t - z_i)`.
pub fn componentwise_ideal_fuse(
    ideals: &[ComponentwiseIdeal],
    points: &[Rat],
) -> Result<ComponentwiseIdeal, FusionError> {
    if ideals.len() != points.len() {
        return Err(FusionError::IdealCountMismatch {
            ideals: ideals.len(),
            points: points.len(),
        });
    }
    for i in 0..points.len() {
        for j in 0..i {
            if points[i] == points[j] {
                return Err(FusionError::CoincidentPoints);
            }
        }
    }
    let mut p_e = RatPoly::one();
    let mut p_h = RatPoly::one();
    let mut p_f = RatPoly::one();
    for (ideal, z) in ideals.iter().zip(points) {
        p_e = p_e.mul(&ideal.p_e.shift(z));
        p_h = p_h.mul(&ideal.p_h.shift(z));
        p_f = p_f.mul(&ideal.p_f.shift(z));
    }
    ComponentwiseIdeal::new(p_e, p_h, p_f)
}

/// The top (collision limit) of a componentwise ideal: each generator is
/// replaced by its leading monomial.
pub fn top_of_ideal(ideal: &ComponentwiseIdeal) -> ComponentwiseIdeal {
    ComponentwiseIdeal {
        p_e: ideal.p_e.top(),
        p_h: ideal.p_h.top(),
        p_f: ideal.p_f.top(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn ipoly(coeffs: &[i64]) -> RatPoly {
        RatPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    // --- polynomial plumbing ---

    #[test]
    fn shift_substitutes_t_minus_z() {
        // (t^2)(t - 1) at z = 1: t^2 - 2t + 1
        assert_eq!(RatPoly::t_power(2).shift(&rat(1)), ipoly(&[1, -2, 1]));
        assert_eq!(RatPoly::one().shift(&rat(5)), RatPoly::one());
        let p = ipoly(&[2, 0, 1]); // t^2 + 2
        assert_eq!(p.shift(&rat(0)), p);
    }

    #[test]
    fn div_rem_is_exact_division_witness() {
        let prod = ipoly(&[-1, 1]).mul(&ipoly(&[2, 1])); // (t-1)(t+2)
        assert_eq!(prod, ipoly(&[-2, 1, 1]));
        let (q, r) = prod.div_rem(&ipoly(&[-1, 1]));
        assert_eq!(q, ipoly(&[2, 1]));
        assert!(r.is_zero());
        assert!(ipoly(&[-1, 1]).divides(&prod));
        assert!(!ipoly(&[1, 1]).divides(&prod));
    }

    // --- ideal construction ---

    #[test]
    fn subalgebra_condition_is_enforced() {
        // (t, t, 1): p_h | p_e p_f since t | t
        assert!(
            ComponentwiseIdeal::new(RatPoly::t_power(1), RatPoly::t_power(1), RatPoly::one())
                .is_ok()
        );
        // (1, t, 1): p_e p_f = 1 not divisible by t
        assert_eq!(
            ComponentwiseIdeal::new(RatPoly::one(), RatPoly::t_power(1), RatPoly::one()),
            Err(FusionError::SubalgebraViolation)
        );
        // non-monic generator
        assert_eq!(
            ComponentwiseIdeal::new(ipoly(&[1, 2]), RatPoly::one(), RatPoly::one()),
            Err(FusionError::NonMonicGenerator { component: 'e' })
        );
    }

    // --- fusion examples ---

    #[test]
    fn b1_fused_at_two_points_gives_b1z() {
        let fused = componentwise_ideal_fuse(
            &[ComponentwiseIdeal::b_m(1), ComponentwiseIdeal::b_m(1)],
            &[rat(0), rat(1)],
        )
        .unwrap();
        let expected = ipoly(&[0, -1, 1]); // t(t-1)
        assert_eq!(fused.p_e, expected);
        assert_eq!(fused.p_h, expected);
        assert_eq!(fused.p_f, expected);
    }

    #[test]
    fn highest_weight_type_ideal_fuses_componentwise() {
        // (1, t, t) fused over Z gives (1, prod(t - z_i), prod(t - z_i))
        let ideal =
            ComponentwiseIdeal::new(RatPoly::one(), RatPoly::t_power(1), RatPoly::t_power(1))
                .unwrap();
        let fused = componentwise_ideal_fuse(&[ideal.clone(), ideal], &[rat(2), rat(-1)]).unwrap();
        assert_eq!(fused.p_e, RatPoly::one());
        let prod = ipoly(&[-2, 1]).mul(&ipoly(&[1, 1]));
        assert_eq!(fused.p_h, prod);
        assert_eq!(fused.p_f, prod);
    }

    #[test]
    fn mixed_types_give_the_two_family_ideal() {
        // M copies of (t, t, 1) at Z and N copies of (1, t, t) at Z' fuse to
        // (prod_Z, prod_Z * prod_Z', prod_Z')
        let z_type =
            ComponentwiseIdeal::new(RatPoly::t_power(1), RatPoly::t_power(1), RatPoly::one())
                .unwrap();
        let zbar_type =
            ComponentwiseIdeal::new(RatPoly::one(), RatPoly::t_power(1), RatPoly::t_power(1))
                .unwrap();
        let fused = componentwise_ideal_fuse(
            &[z_type.clone(), z_type, zbar_type.clone(), zbar_type],
            &[rat(0), rat(1), rat(2), rat(3)],
        )
        .unwrap();
        let prod_z = ipoly(&[0, 1]).mul(&ipoly(&[-1, 1]));
        let prod_zbar = ipoly(&[-2, 1]).mul(&ipoly(&[-3, 1]));
        assert_eq!(fused.p_e, prod_z);
        assert_eq!(fused.p_f, prod_zbar);
        assert_eq!(fused.p_h, prod_z.mul(&prod_zbar));
    }

    #[test]
    fn fuse_rejects_bad_inputs() {
        assert_eq!(
            componentwise_ideal_fuse(&[ComponentwiseIdeal::b_m(1)], &[rat(0), rat(1)]),
            Err(FusionError::IdealCountMismatch {
                ideals: 1,
                points: 2
            })
        );
        assert_eq!(
            componentwise_ideal_fuse(
                &[ComponentwiseIdeal::b_m(1), ComponentwiseIdeal::b_m(1)],
                &[rat(3), rat(3)]
            ),
            Err(FusionError::CoincidentPoints)
        );
    }

    // --- top ---

    #[test]
    fn top_of_fused_b1_is_b_n() {
        let fused = componentwise_ideal_fuse(
            &[ComponentwiseIdeal::b_m(1), ComponentwiseIdeal::b_m(1)],
            &[rat(0), rat(1)],
        )
        .unwrap();
        assert_eq!(top_of_ideal(&fused), ComponentwiseIdeal::b_m(2));
        // a homogeneous ideal is a fixed point
        let b3 = ComponentwiseIdeal::b_m(3);
        assert_eq!(top_of_ideal(&b3), b3);
    }

    /// Independent oracle: the fused generator as an iterated lcm of the
    /// shifted generators, computed through the Euclidean gcd rather than
    /// the coprime-product shortcut.
    fn fuse_component_by_lcm(polys: &[RatPoly]) -> RatPoly {
        fn monic(p: &RatPoly) -> RatPoly {
            let lead = p.coeffs().last().expect("non-zero").clone();
            RatPoly::new(p.coeffs().iter().map(|c| c / &lead).collect())
        }
        fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
            let (mut a, mut b) = (a.clone(), b.clone());
            while !b.is_zero() {
                let r = a.div_rem(&b).1;
                a = b;
                b = r;
            }
            monic(&a)
        }
        let mut acc = RatPoly::one();
        for p in polys {
            let g = gcd(&acc, p);
            let (q, r) = acc.mul(p).div_rem(&g);
            assert!(r.is_zero());
            acc = monic(&q);
        }
        acc
    }

    #[test]
    fn fusion_matches_the_lcm_oracle() {
        let b2 = ComponentwiseIdeal::b_m(2);
        let z_type =
            ComponentwiseIdeal::new(RatPoly::t_power(1), RatPoly::t_power(1), RatPoly::one())
                .unwrap();
        let zbar_type =
            ComponentwiseIdeal::new(RatPoly::one(), RatPoly::t_power(1), RatPoly::t_power(1))
                .unwrap();
        let configs: Vec<(Vec<ComponentwiseIdeal>, Vec<Rat>)> = vec![
            (
                vec![ComponentwiseIdeal::b_m(1); 3],
                vec![rat(0), rat(1), rat(2)],
            ),
            (
                vec![b2.clone(), ComponentwiseIdeal::b_m(1)],
                vec![rat(-1), rat(3)],
            ),
            (
                vec![z_type.clone(), z_type, zbar_type.clone(), zbar_type],
                vec![rat(0), rat(1), rat(2), rat(5)],
            ),
        ];
        type Pick = fn(&ComponentwiseIdeal) -> &RatPoly;
        let picks: [(Pick, &str); 3] = [
            (|i| &i.p_e, "p_e"),
            (|i| &i.p_h, "p_h"),
            (|i| &i.p_f, "p_f"),
        ];
        for (ideals, points) in configs {
            let fused = componentwise_ideal_fuse(&ideals, &points).unwrap();
            for (pick, name) in picks {
                let shifted: Vec<RatPoly> = ideals
                    .iter()
                    .zip(&points)
                    .map(|(ideal, z)| pick(ideal).shift(z))
                    .collect();
                assert_eq!(
                    *pick(&fused),
                    fuse_component_by_lcm(&shifted),
                    "component {name}"
                );
            }
        }
    }

    #[test]
    fn fusion_is_symmetric_and_associative() {
        let a = ComponentwiseIdeal::b_m(2);
        let b = ComponentwiseIdeal::new(RatPoly::t_power(1), RatPoly::t_power(1), RatPoly::one())
            .unwrap();
        let c = ComponentwiseIdeal::new(RatPoly::one(), RatPoly::t_power(1), RatPoly::t_power(1))
            .unwrap();
        let points = [rat(1), rat(2), rat(-1)];
        let reference =
            componentwise_ideal_fuse(&[a.clone(), b.clone(), c.clone()], &points).unwrap();
        // simultaneous permutation of (ideals, points)
        let permuted = componentwise_ideal_fuse(
            &[c.clone(), a.clone(), b.clone()],
            &[rat(-1), rat(1), rat(2)],
        )
        .unwrap();
        assert_eq!(reference, permuted);
        // associativity: fuse the first two, then attach the third; the
        // intermediate ideal carries its points already, so it re-enters at 0
        let first_two = componentwise_ideal_fuse(&[a, b], &[rat(1), rat(2)]).unwrap();
        let nested = componentwise_ideal_fuse(&[first_two, c], &[rat(0), rat(-1)]).unwrap();
        assert_eq!(reference, nested);
    }

    #[test]
    fn ideal_json_round_trip() {
        let ideal =
            ComponentwiseIdeal::new(ipoly(&[-1, 1]), ipoly(&[-1, 1]), RatPoly::one()).unwrap();
        let s = serde_json::to_string(&ideal).unwrap();
        assert_eq!(s, r#"{"p_e":["-1","1"],"p_h":["-1","1"],"p_f":["1"]}"#);
        let back: ComponentwiseIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ideal);
        // integer coefficients and rationals-as-strings both parse
        let mixed: ComponentwiseIdeal =
            serde_json::from_str(r#"{"p_e":[0,1],"p_h":["-1/2",1],"p_f":[1]}"#).unwrap();
        assert_eq!(mixed.p_h.coeffs()[0], crate::linalg::rat_frac(-1, 2));
    }
}
