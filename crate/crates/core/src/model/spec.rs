//! Model specifications: which process, with which exact rates.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::ModelError;
use crate::exact::{format_rat, parse_rat, rat_int, Rat};

/// Left boundary variants of the two-species process (one column of the
/// integrable table: which species may enter or be promoted at site 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeftTable {
    L1,
    L2,
    L3,
    L4,
}

/// Right boundary variants (which species may leave or be demoted at site L).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RightTable {
    R1,
    R2,
    R3,
    R4,
}

impl fmt::Display for LeftTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl fmt::Display for RightTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for LeftTable {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "L1" => Ok(LeftTable::L1),
            "L2" => Ok(LeftTable::L2),
            "L3" => Ok(LeftTable::L3),
            "L4" => Ok(LeftTable::L4),
            _ => Err(ModelError::BadDocument(format!("unknown left table {s:?}"))),
        }
    }
}

impl std::str::FromStr for RightTable {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "R1" => Ok(RightTable::R1),
            "R2" => Ok(RightTable::R2),
            "R3" => Ok(RightTable::R3),
            "R4" => Ok(RightTable::R4),
            _ => Err(ModelError::BadDocument(format!("unknown right table {s:?}"))),
        }
    }
}

/// Derived boundary combinations of the diffusion-dissipation process.
///
/// `phi = (k-1)/(k+1)`, `a = (2k-alpha-gamma)/(2k+alpha+gamma)`,
/// `b = (2k-delta-beta)/(2k+delta+beta)`, `c = (gamma-alpha)/(2k+alpha+gamma)`,
/// `d = (beta-delta)/(2k+delta+beta)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DissepDerived {
    pub phi: Rat,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

/// Which process, plus its exact rate parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelSpec {
    /// Totally asymmetric exclusion: injection `alpha`, ejection `beta`,
    /// bulk hops to the right at rate 1.
    Tasep { alpha: Rat, beta: Rat },
    /// Symmetric exclusion at rate `kappa^2` with pair evaporation and
    /// condensation at rate 1; boundary injection/ejection `alpha`, `gamma`
    /// on the left and `delta`, `beta` on the right.
    Dissep {
        alpha: Rat,
        beta: Rat,
        gamma: Rat,
        delta: Rat,
        kappa: Rat,
    },
    /// Two-species totally asymmetric exclusion with one integrable boundary
    /// table on each side. Only the rates the chosen tables mention are read.
    TwoTasep {
        left: LeftTable,
        right: RightTable,
        alpha: Rat,
        beta: Rat,
        mu: Rat,
        nu: Rat,
    },
}

fn require_nonneg(name: &'static str, value: &Rat) -> Result<(), ModelError> {
    if value.is_negative() {
        Err(ModelError::NegativeRate {
            name,
            value: format_rat(value),
        })
    } else {
        Ok(())
    }
}

impl ModelSpec {
    pub fn tasep(alpha: Rat, beta: Rat) -> Result<Self, ModelError> {
        require_nonneg("alpha", &alpha)?;
        require_nonneg("beta", &beta)?;
        Ok(ModelSpec::Tasep { alpha, beta })
    }

    pub fn dissep(
        alpha: Rat,
        beta: Rat,
        gamma: Rat,
        delta: Rat,
        kappa: Rat,
    ) -> Result<Self, ModelError> {
        require_nonneg("alpha", &alpha)?;
        require_nonneg("beta", &beta)?;
        require_nonneg("gamma", &gamma)?;
        require_nonneg("delta", &delta)?;
        if !kappa.is_positive() {
            return Err(ModelError::NonPositiveKappa);
        }
        Ok(ModelSpec::Dissep {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        })
    }

    pub fn two_tasep(
        left: LeftTable,
        right: RightTable,
        alpha: Rat,
        beta: Rat,
        mu: Rat,
        nu: Rat,
    ) -> Result<Self, ModelError> {
        require_nonneg("alpha", &alpha)?;
        require_nonneg("beta", &beta)?;
        require_nonneg("mu", &mu)?;
        require_nonneg("nu", &nu)?;
        // The L2/R2 tables carry a complementary rate 1-alpha / 1-beta.
        if left == LeftTable::L2 && alpha > rat_int(1) {
            return Err(ModelError::RateOutOfRange(
                "left table L2 needs alpha <= 1 (rate 1-alpha)".into(),
            ));
        }
        if right == RightTable::R2 && beta > rat_int(1) {
            return Err(ModelError::RateOutOfRange(
                "right table R2 needs beta <= 1 (rate 1-beta)".into(),
            ));
        }
        Ok(ModelSpec::TwoTasep {
            left,
            right,
            alpha,
            beta,
            mu,
            nu,
        })
    }

    /// Number of species values a site can take (including the hole).
    pub fn species(&self) -> usize {
        match self {
            ModelSpec::Tasep { .. } | ModelSpec::Dissep { .. } => 2,
            ModelSpec::TwoTasep { .. } => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ModelSpec::Tasep { .. } => "tasep",
            ModelSpec::Dissep { .. } => "dissep",
            ModelSpec::TwoTasep { .. } => "2tasep",
        }
    }

    /// Derived parameters of the diffusion-dissipation process; `None` for
    /// the other models.
    pub fn dissep_derived(&self) -> Option<DissepDerived> {
        let ModelSpec::Dissep {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        } = self
        else {
            return None;
        };
        let one = Rat::one();
        let two = rat_int(2);
        let phi = (kappa - &one) / (kappa + &one);
        let left_den = &two * kappa + alpha + gamma;
        let right_den = &two * kappa + delta + beta;
        Some(DissepDerived {
            phi,
            a: (&two * kappa - alpha - gamma) / &left_den,
            b: (&two * kappa - delta - beta) / &right_den,
            c: (gamma - alpha) / &left_den,
            d: (beta - delta) / &right_den,
        })
    }

    /// Serialize to the interchange document
    /// `{"model": ..., "rates": {...}, "left": ..., "right": ...}`
    /// with rates as exact `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut rates = BTreeMap::new();
        let mut doc = serde_json::Map::new();
        match self {
            ModelSpec::Tasep { alpha, beta } => {
                rates.insert("alpha", format_rat(alpha));
                rates.insert("beta", format_rat(beta));
                doc.insert("model".into(), "tasep".into());
            }
            ModelSpec::Dissep {
                alpha,
                beta,
                gamma,
                delta,
                kappa,
            } => {
                rates.insert("alpha", format_rat(alpha));
                rates.insert("beta", format_rat(beta));
                rates.insert("gamma", format_rat(gamma));
                rates.insert("delta", format_rat(delta));
                rates.insert("kappa", format_rat(kappa));
                doc.insert("model".into(), "dissep".into());
            }
            ModelSpec::TwoTasep {
                left,
                right,
                alpha,
                beta,
                mu,
                nu,
            } => {
                rates.insert("alpha", format_rat(alpha));
                rates.insert("beta", format_rat(beta));
                rates.insert("mu", format_rat(mu));
                rates.insert("nu", format_rat(nu));
                doc.insert("model".into(), "2tasep".into());
                doc.insert("left".into(), left.to_string().into());
                doc.insert("right".into(), right.to_string().into());
            }
        }
        doc.insert(
            "rates".into(),
            serde_json::to_value(rates).expect("string map"),
        );
        serde_json::Value::Object(doc)
    }

    pub fn from_json(doc: &serde_json::Value) -> Result<Self, ModelError> {
        let obj = doc
            .as_object()
            .ok_or_else(|| ModelError::BadDocument("expected a JSON object".into()))?;
        let model = obj
            .get("model")
            .and_then(|v| v.as_str())
            .ok_or_else(|| ModelError::BadDocument("missing \"model\" field".into()))?;
        let rates = obj
            .get("rates")
            .and_then(|v| v.as_object())
            .ok_or_else(|| ModelError::BadDocument("missing \"rates\" object".into()))?;
        let rate = |name: &str, default: Option<Rat>| -> Result<Rat, ModelError> {
            match rates.get(name) {
                Some(v) => {
                    let s = v.as_str().ok_or_else(|| {
                        ModelError::BadDocument(format!("rate {name:?} must be a \"p/q\" string"))
                    })?;
                    Ok(parse_rat(s)?)
                }
                None => default.ok_or_else(|| {
                    ModelError::BadDocument(format!("missing rate {name:?}"))
                }),
            }
        };
        match model {
            "tasep" => ModelSpec::tasep(rate("alpha", None)?, rate("beta", None)?),
            "dissep" => ModelSpec::dissep(
                rate("alpha", None)?,
                rate("beta", None)?,
                rate("gamma", None)?,
                rate("delta", None)?,
                rate("kappa", None)?,
            ),
            "2tasep" => {
                let table = |key: &str| -> Result<&str, ModelError> {
                    obj.get(key).and_then(|v| v.as_str()).ok_or_else(|| {
                        ModelError::BadDocument(format!("missing \"{key}\" table name"))
                    })
                };
                ModelSpec::two_tasep(
                    table("left")?.parse()?,
                    table("right")?.parse()?,
                    rate("alpha", Some(rat_int(0)))?,
                    rate("beta", Some(rat_int(0)))?,
                    // The L1/R1 tables use mu and nu; default 1 when absent.
                    rate("mu", Some(rat_int(1)))?,
                    rate("nu", Some(rat_int(1)))?,
                )
            }
            other => Err(ModelError::UnknownModel(other.to_string())),
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Tasep { alpha, beta } => {
                write!(f, "tasep(alpha={}, beta={})", format_rat(alpha), format_rat(beta))
            }
            ModelSpec::Dissep {
                alpha,
                beta,
                gamma,
                delta,
                kappa,
            } => write!(
                f,
                "dissep(alpha={}, beta={}, gamma={}, delta={}, kappa={})",
                format_rat(alpha),
                format_rat(beta),
                format_rat(gamma),
                format_rat(delta),
                format_rat(kappa)
            ),
            ModelSpec::TwoTasep {
                left,
                right,
                alpha,
                beta,
                ..
            } => write!(
                f,
                "2tasep({left}-{right}, alpha={}, beta={})",
                format_rat(alpha),
                format_rat(beta)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn validation_rejects_bad_rates() {
        assert!(ModelSpec::tasep(rat(-1, 2), rat_int(1)).is_err());
        assert!(ModelSpec::dissep(rat_int(1), rat_int(1), rat_int(0), rat_int(0), rat_int(0))
            .is_err());
        assert!(ModelSpec::two_tasep(
            LeftTable::L2,
            RightTable::R3,
            rat(3, 2),
            rat_int(1),
            rat_int(1),
            rat_int(1),
        )
        .is_err());
    }

    #[test]
    fn dissep_derived_values() {
        // kappa = 3 -> phi = 1/2; symmetric rates alpha=gamma make c = 0.
        let spec =
            ModelSpec::dissep(rat_int(1), rat_int(2), rat_int(1), rat_int(1), rat_int(3))
                .unwrap();
        let p = spec.dissep_derived().unwrap();
        assert_eq!(p.phi, rat(1, 2));
        assert_eq!(p.c, rat_int(0));
        assert_eq!(p.a, rat(1, 2)); // (6-2)/(6+2)
        assert_eq!(p.b, rat(1, 3)); // (6-3)/(6+3)
        assert_eq!(p.d, rat(1, 9)); // (2-1)/9
    }

    #[test]
    fn json_round_trip() {
        let specs = vec![
            ModelSpec::tasep(rat(1, 2), rat(1, 3)).unwrap(),
            ModelSpec::dissep(rat(1, 2), rat(2, 3), rat(1, 5), rat(1, 7), rat_int(3)).unwrap(),
            ModelSpec::two_tasep(
                LeftTable::L2,
                RightTable::R3,
                rat(1, 2),
                rat_int(1),
                rat_int(1),
                rat_int(1),
            )
            .unwrap(),
        ];
        for spec in specs {
            let doc = spec.to_json();
            let back = ModelSpec::from_json(&doc).unwrap();
            assert_eq!(back, spec);
        }
    }

    #[test]
    fn json_reports_bad_literals() {
        let doc = serde_json::json!({
            "model": "tasep",
            "rates": {"alpha": "1/0", "beta": "1"}
        });
        assert!(ModelSpec::from_json(&doc).is_err());
        let doc = serde_json::json!({"model": "asep", "rates": {}});
        assert!(matches!(
            ModelSpec::from_json(&doc),
            Err(ModelError::UnknownModel(_))
        ));
    }
}
