//! File formats: instances, inequalities and fractional points as UTF-8
//! JSON documents, one document per file.
//!
//! Emission is canonical (fixed key order, nonzero entries in coordinate
//! order), so parse-then-emit reproduces an emitted document byte for
//! byte.

use crate::cardinality::CardinalitySequence;
use crate::error::{invalid, Error, Result};
use crate::generators;
use crate::graph::{Space, Variant};
use crate::inequality::{ClassSpec, LinearInequality, Sense};
use crate::rational::Rational;
use crate::separation::FractionalPoint;
use crate::solver::{Instance, Objective};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

fn to_i64(value: &BigInt, what: &str) -> Result<i64> {
    i64::try_from(value.clone())
        .map_err(|_| invalid(format!("{what} exceeds the 64-bit range of the file format")))
}

fn rational_to_pair(value: &Rational, what: &str) -> Result<(i64, i64)> {
    Ok((to_i64(value.numer(), what)?, to_i64(value.denom(), what)?))
}

fn pair_to_rational(num: i64, den: i64) -> Result<Rational> {
    if den == 0 {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
}

/// Weighted-instance document.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InstanceFile {
    pub kind: Variant,
    pub n: usize,
    pub c: Vec<usize>,
    pub objective: Objective,
    /// One entry per arc/edge: [tail, head, numerator, denominator].
    pub weights: Vec<(usize, usize, i64, i64)>,
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Result<InstanceFile> {
        let geometry = instance.space.geometry();
        let weights = geometry
            .coords()
            .iter()
            .zip(&instance.weights)
            .map(|(&(u, v), w)| rational_to_pair(w, "weight").map(|(p, q)| (u, v, p, q)))
            .collect::<Result<Vec<_>>>()?;
        Ok(InstanceFile {
            kind: instance.space.variant,
            n: instance.space.n,
            c: instance.c.values().to_vec(),
            objective: instance.objective,
            weights,
        })
    }

    pub fn into_instance(self) -> Result<Instance> {
        let space = Space::new(self.kind, self.n)?;
        let geometry = space.geometry();
        let c = CardinalitySequence::new(self.c)?;
        let mut weights: Vec<Option<Rational>> = vec![None; geometry.len()];
        for (u, v, num, den) in self.weights {
            let Some(idx) = geometry.index_of(u, v) else {
                return Err(Error::Parse(format!("({u},{v}) is not a coordinate of {space}")));
            };
            if weights[idx].is_some() {
                return Err(Error::Parse(format!("duplicate weight for ({u},{v})")));
            }
            weights[idx] = Some(pair_to_rational(num, den)?);
        }
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| {
                    let (u, v) = geometry.coords()[i];
                    Error::Parse(format!("missing weight for ({u},{v})"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Instance::new(space, c, weights, self.objective)
    }
}

/// Inequality document: a structured class (regenerated bit-exactly from
/// its parameters) or an explicit custom coefficient list.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InequalityFile {
    pub kind: Variant,
    pub n: usize,
    pub c: Vec<usize>,
    #[serde(flatten)]
    pub class: ClassSpec,
    /// Custom classes only: nonzero coefficients as [tail, head, num, den].
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coeffs: Option<Vec<(usize, usize, i64, i64)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sense: Option<Sense>,
    /// Custom classes only: right-hand side as [num, den].
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<(i64, i64)>,
}

impl InequalityFile {
    pub fn from_inequality(ineq: &LinearInequality, c: &CardinalitySequence) -> Result<Self> {
        let mut file = InequalityFile {
            kind: ineq.space.variant,
            n: ineq.space.n,
            c: c.values().to_vec(),
            class: ineq.class.clone(),
            coeffs: None,
            sense: None,
            rhs: None,
        };
        if ineq.class == ClassSpec::Custom {
            let geometry = ineq.space.geometry();
            let mut coeffs = Vec::new();
            for (&(u, v), coeff) in geometry.coords().iter().zip(&ineq.coeffs) {
                if !coeff.is_zero() {
                    let (p, q) = rational_to_pair(coeff, "coefficient")?;
                    coeffs.push((u, v, p, q));
                }
            }
            file.coeffs = Some(coeffs);
            file.sense = Some(ineq.sense);
            file.rhs = Some(rational_to_pair(&ineq.rhs, "right-hand side")?);
        }
        Ok(file)
    }

    pub fn into_inequality(self) -> Result<(LinearInequality, CardinalitySequence)> {
        let space = Space::new(self.kind, self.n)?;
        let c = CardinalitySequence::new(self.c)?;
        let geometry = space.geometry();
        let ineq = if self.class == ClassSpec::Custom {
            let listed = self
                .coeffs
                .ok_or_else(|| Error::Parse("custom inequality without coefficients".into()))?;
            let sense = self
                .sense
                .ok_or_else(|| Error::Parse("custom inequality without sense".into()))?;
            let (rn, rd) = self
                .rhs
                .ok_or_else(|| Error::Parse("custom inequality without right-hand side".into()))?;
            let mut coeffs = vec![Rational::zero(); geometry.len()];
            for (u, v, num, den) in listed {
                let Some(idx) = geometry.index_of(u, v) else {
                    return Err(Error::Parse(format!("({u},{v}) is not a coordinate of {space}")));
                };
                coeffs[idx] = pair_to_rational(num, den)?;
            }
            LinearInequality::custom(space, coeffs, sense, pair_to_rational(rn, rd)?)?
        } else {
            if self.coeffs.is_some() || self.sense.is_some() || self.rhs.is_some() {
                return Err(Error::Parse(
                    "structured classes regenerate their coefficients; drop coeffs/sense/rhs".into(),
                ));
            }
            generators::regenerate(&geometry, &self.class, &c)?
        };
        Ok((ineq, c))
    }
}

/// Fractional-point document; entries not listed are zero.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PointFile {
    /// Nonzero entries as [tail, head, numerator, denominator].
    pub entries: Vec<(usize, usize, i64, i64)>,
}

impl PointFile {
    pub fn from_point(point: &FractionalPoint) -> Result<Self> {
        let geometry = point.space().geometry();
        let mut entries = Vec::new();
        for (&(u, v), value) in geometry.coords().iter().zip(point.entries()) {
            if !value.is_zero() {
                let (p, q) = rational_to_pair(value, "point entry")?;
                entries.push((u, v, p, q));
            }
        }
        Ok(PointFile { entries })
    }

    pub fn into_point(self, space: Space) -> Result<FractionalPoint> {
        let geometry = space.geometry();
        let mut entries = vec![Rational::zero(); geometry.len()];
        for (u, v, num, den) in self.entries {
            let Some(idx) = geometry.index_of(u, v) else {
                return Err(Error::Parse(format!("({u},{v}) is not a coordinate of {space}")));
            };
            entries[idx] = pair_to_rational(num, den)?;
        }
        FractionalPoint::new(space, entries)
    }
}

pub fn emit<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinality::cseq;
    use crate::graph::PathDigraph;
    use crate::rational::{rat, ratio};

    #[test]
    fn instance_roundtrip_is_identity() {
        let space = Space::new(Variant::Path, 4).unwrap();
        let d = space.geometry().len();
        let weights: Vec<Rational> = (0..d).map(|i| ratio(i as i64 + 1, 3)).collect();
        let instance =
            Instance::new(space, cseq(&[2, 4]), weights, Objective::Minimize).unwrap();
        let text = emit(&InstanceFile::from_instance(&instance).unwrap()).unwrap();
        let parsed: InstanceFile = parse(&text).unwrap();
        let re_emitted = emit(&parsed).unwrap();
        assert_eq!(text, re_emitted);
        let back = parsed.into_instance().unwrap();
        assert_eq!(back.weights, instance.weights);
        assert_eq!(back.c, instance.c);
    }

    #[test]
    fn structured_inequality_roundtrip() {
        let d5 = PathDigraph::new(5).unwrap();
        let c = cseq(&[2, 4]);
        let ineq = generators::cf_node(d5.geometry(), &[0, 1, 2, 5], &c, 1).unwrap();
        let text = emit(&InequalityFile::from_inequality(&ineq, &c).unwrap()).unwrap();
        let parsed: InequalityFile = parse(&text).unwrap();
        assert_eq!(emit(&parsed).unwrap(), text);
        let (back, back_c) = parsed.into_inequality().unwrap();
        assert_eq!(back, ineq);
        assert_eq!(back_c, c);
    }

    #[test]
    fn custom_inequality_roundtrip() {
        let space = Space::new(Variant::Cycle, 4).unwrap();
        let d = space.geometry().len();
        let mut coeffs = vec![rat(0); d];
        coeffs[0] = ratio(5, 2);
        coeffs[3] = rat(-1);
        let ineq = LinearInequality::custom(space, coeffs, Sense::Le, ratio(7, 3)).unwrap();
        let c = cseq(&[2, 4]);
        let text = emit(&InequalityFile::from_inequality(&ineq, &c).unwrap()).unwrap();
        let parsed: InequalityFile = parse(&text).unwrap();
        assert_eq!(emit(&parsed).unwrap(), text);
        let (back, _) = parsed.into_inequality().unwrap();
        assert_eq!(back.coeffs, ineq.coeffs);
        assert_eq!(back.rhs, ineq.rhs);
    }

    #[test]
    fn missing_and_duplicate_weights_rejected() {
        let text = r#"{"kind":"path","n":3,"c":[2,3],"objective":"minimize","weights":[[0,1,1,1]]}"#;
        let parsed: InstanceFile = parse(text).unwrap();
        assert!(parsed.into_instance().is_err());

        let dup = r#"{"kind":"path","n":3,"c":[2,3],"objective":"minimize","weights":[
            [0,1,1,1],[0,1,2,1],[0,2,1,1],[1,2,1,1],[1,3,1,1],[2,1,1,1],[2,3,1,1]]}"#;
        let parsed: InstanceFile = parse(dup).unwrap();
        assert!(parsed.into_instance().is_err());
    }

    #[test]
    fn point_roundtrip() {
        let space = Space::new(Variant::Path, 4).unwrap();
        let g = space.geometry();
        let mut entries = vec![rat(0); g.len()];
        entries[g.index_of(0, 1).unwrap()] = ratio(1, 2);
        entries[g.index_of(1, 4).unwrap()] = ratio(1, 2);
        let point = FractionalPoint::new(space, entries).unwrap();
        let text = emit(&PointFile::from_point(&point).unwrap()).unwrap();
        let parsed: PointFile = parse(&text).unwrap();
        let back = parsed.into_point(space).unwrap();
        assert_eq!(back, point);
    }
}
