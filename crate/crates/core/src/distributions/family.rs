use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// How a family's quantile is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaStatus {
    /// The published inverse is algebraically correct and is what we evaluate.
    Verified,
    /// The published inverse fails the roundtrip; a re-derived form is evaluated.
    Corrected,
    /// No closed-form or Lambert-W inverse exists; numeric inversion only.
    NoClosedForm,
}

/// Static description of one registered family.
#[derive(Debug, Clone, Copy)]
pub struct FamilyInfo {
    pub id: FamilyId,
    pub title: &'static str,
    pub params: &'static [&'static str],
    /// Survival function in plain notation.
    pub survival: &'static str,
    pub constraints: &'static str,
    pub status: FormulaStatus,
    /// Whether the quantile goes through the principal branch of Lambert W.
    pub lambert: bool,
    pub note: &'static str,
}

macro_rules! families {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// Identifier of a lifetime distribution family.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum FamilyId {
            $($variant),+
        }

        impl FamilyId {
            /// Every family, in catalog order.
            pub const ALL: [FamilyId; 28] = [$(FamilyId::$variant),+];

            /// Stable snake_case identifier used by the CLI and the fixture files.
            pub const fn as_str(self) -> &'static str {
                match self {
                    $(FamilyId::$variant => $name),+
                }
            }
        }

        impl FromStr for FamilyId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($name => Ok(FamilyId::$variant),)+
                    _ => Err(Error::UnknownFamily(s.to_owned())),
                }
            }
        }
    };
}

families! {
    Weibull2 => "weibull2",
    Gompertz2 => "gompertz2",
    TruncLogWeibull => "trunc_log_weibull",
    FlexibleWeibull => "flexible_weibull",
    Pham => "pham",
    ExpWeibull => "exp_weibull",
    ModWeibullExt => "mod_weibull_ext",
    ExpInvWeibull => "exp_inv_weibull",
    GenWeibull => "gen_weibull",
    ExtWeibull => "ext_weibull",
    GenPowerWeibull => "gen_power_weibull",
    OddWeibull => "odd_weibull",
    Kies4 => "kies4",
    ExpKumWeibull5 => "exp_kum_weibull5",
    LaiWeibull3 => "lai_weibull3",
    InvModWeibull => "inv_mod_weibull",
    XieLai3 => "xie_lai3",
    GenModWeibull => "gen_mod_weibull",
    ShiftedModWeibull => "shifted_mod_weibull",
    AdditiveWeibull => "additive_weibull",
    NadarajahKotz => "nadarajah_kotz",
    KumModWeibull => "kum_mod_weibull",
    Phani5 => "phani5",
    ModLogLogistic => "mod_log_logistic",
    GompertzMakeham => "gompertz_makeham",
    ModPowerLomax => "mod_power_lomax",
    ModPareto4 => "mod_pareto4",
    ModLognormal => "mod_lognormal",
}

impl FamilyId {
    pub fn info(self) -> &'static FamilyInfo {
        &CATALOG[self as usize]
    }

    pub fn param_names(self) -> &'static [&'static str] {
        self.info().params
    }

    pub fn status(self) -> FormulaStatus {
        self.info().status
    }

    /// True when [`quantile`](super::DistributionSpec::quantile) is available.
    pub fn has_analytic_quantile(self) -> bool {
        self.status() != FormulaStatus::NoClosedForm
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for FamilyId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

use FormulaStatus::{Corrected, NoClosedForm, Verified};

const ABC: &[&str] = &["a", "b", "c"];
const AB: &[&str] = &["a", "b"];
const ABCD: &[&str] = &["a", "b", "c", "d"];
const ABCDE: &[&str] = &["a", "b", "c", "d", "e"];
const ABCDMU: &[&str] = &["a", "b", "c", "d", "mu"];

static CATALOG: [FamilyInfo; 28] = [
    FamilyInfo {
        id: FamilyId::Weibull2,
        title: "Two-parameter Weibull",
        params: AB,
        survival: "exp(-a t^b)",
        constraints: "a > 0, b > 0; t >= 0",
        status: Verified,
        lambert: false,
        note: "published inverse [ln(1-u)/(-a)]^(1/b) roundtrips",
    },
    FamilyInfo {
        id: FamilyId::Gompertz2,
        title: "Gompertz",
        params: AB,
        survival: "exp[(a/b)(1 - exp(b t))]",
        constraints: "a > 0, b != 0; t >= 0; for b < 0 the law is defective and u < 1 - exp(a/b)",
        status: Verified,
        lambert: false,
        note: "published inverse (1/b) ln[1 - (b/a) ln(1-u)] roundtrips",
    },
    FamilyInfo {
        id: FamilyId::TruncLogWeibull,
        title: "Log-Weibull (Gumbel minimum)",
        params: AB,
        survival: "exp(-exp((t-a)/b))",
        constraints: "b > 0, a real; t real",
        status: Verified,
        lambert: false,
        note: "published inverse a + b ln(-ln(1-u)) roundtrips",
    },
    FamilyInfo {
        id: FamilyId::FlexibleWeibull,
        title: "Flexible Weibull",
        params: AB,
        survival: "exp(-exp(a t - b/t))",
        constraints: "a > 0, b > 0; t > 0",
        status: Corrected,
        lambert: false,
        note: "published inverse -ln[-ln(1-u) +/- sqrt(...)]/(2a) does not solve a t - b/t = y; \
               implemented positive root of a t^2 - y t - b = 0, t = [y + sqrt(y^2 + 4ab)]/(2a), y = ln(-ln(1-u))",
    },
    FamilyInfo {
        id: FamilyId::Pham,
        title: "Pham Weibull",
        params: AB,
        survival: "exp(1 - a^(t^b))",
        constraints: "a > 1, b > 0; t >= 0",
        status: Verified,
        lambert: false,
        note: "published inverse [ln(1 - ln(1-u))/ln a]^(1/b) roundtrips",
    },
    FamilyInfo {
        id: FamilyId::ExpWeibull,
        title: "Exponentiated Weibull",
        params: ABC,
        survival: "1 - [1 - exp(-a t^b)]^c",
        constraints: "a, b, c > 0; t >= 0",
        status: Verified,
        lambert: false,
        note: "published inverse [(-1/a) ln(1 - u^(1/c))]^(1/b) roundtrips",
    },
    FamilyInfo {
        id: FamilyId::ModWeibullExt,
        title: "Modified Weibull extension",
        params: ABC,
        survival: "exp{a b [1 - exp((t/b)^c)]}",
        constraints: "a, b, c > 0; t >= 0",
        status: Corrected,
        lambert: false,
        note: "published inverse carries prefactor a where the scale b belongs; \
               implemented t = b [ln(1 - ln(1-u)/(a b))]^(1/c)",
    },
    FamilyInfo {
        id: FamilyId::ExpInvWeibull,
        title: "Exponentiated inverse Weibull",
        params: ABC,
        survival: "[1 - exp(-a t^(-c))]^b",
        constraints: "a > 0, b > 0, c > 0; t > 0",
        status: Verified,
        lambert: false,
        note: "published inverse [(-a)/ln(1 - (1-u)^(1/b))]^(1/c) roundtrips",
    },
    FamilyInfo {
        id: FamilyId::GenWeibull,
        title: "Generalized Weibull",
        params: ABC,
        survival: "(1 - a c t^b)^(1/c)",
        constraints: "a, b, c > 0; 0 <= t <= (a c)^(-1/b)",
        status: Verified,
        lambert: false,
        note: "published inverse [(1 - (1-u)^c)/(a c)]^(1/b) roundtrips; the survival function \
               vanishes at (a c)^(-1/b), which is the support upper bound used",
    },
    FamilyInfo {
        id: FamilyId::ExtWeibull,
        title: "Extended Weibull",
        params: ABC,
        survival: "a exp(-(b t)^c) / [1 - (1-a) exp(-(b t)^c)]",
        constraints: "a > 0, b > 0, c > 0; t >= 0",
        status: Corrected,
        lambert: false,
        note: "published numerator (2a-1) + u(1-a) over u does not invert the survival function; \
               implemented t = (1/b) {ln[(1 - u(1-a))/(1-u)]}^(1/c)",
    },
    FamilyInfo {
        id: FamilyId::GenPowerWeibull,
        title: "Generalized power Weibull",
        params: ABC,
        survival: "exp{1 - (1 + a t^b)^(1/c)}",
        constraints: "a, b, c > 0; t >= 0",
        status: Verified,
        lambert: false,
        note: "published inverse {([1 - ln(1-u)]^c - 1)/a}^(1/b) roundtrips",
    },
    FamilyInfo {
        id: FamilyId::OddWeibull,
        title: "Odd Weibull",
        params: ABC,
        survival: "{1 + [exp(a t^b) - 1]^c}^(-1)",
        constraints: "a, b, c > 0; t >= 0",
        status: Verified,
        lambert: false,
        note: "published inverse {(1/a) ln[(u/(1-u))^(1/c) + 1]}^(1/b) roundtrips",
    },
    FamilyInfo {
        id: FamilyId::Kies4,
        title: "Four-parameter Kies Weibull",
        params: ABCD,
        survival: "exp[-c ((t-a)/(b-t))^d]",
        constraints: "0 <= a < b, c > 0, d > 0; a <= t < b",
        status: Verified,
        lambert: false,
        note: "published inverse [(b^d H/c)^(1/d) + a]/[(H/c)^(1/d) + 1], H = -ln(1-u), roundtrips",
    },
    FamilyInfo {
        id: FamilyId::ExpKumWeibull5,
        title: "Exponentiated Kumaraswamy Weibull",
        params: ABCDE,
        survival: "1 - [1 - {1 - (1 - exp(-d t^e))^a}^b]^c",
        constraints: "a, b, c, d, e > 0; t >= 0",
        status: Corrected,
        lambert: false,
        note: "published inverse uses (1-u)^(1/c) where u^(1/c) is required, i.e. it returns Q(1-u); \
               implemented t = {-ln(1 - [1 - (1 - u^(1/c))^(1/b)]^(1/a))/d}^(1/e)",
    },
    FamilyInfo {
        id: FamilyId::LaiWeibull3,
        title: "Three-parameter Weibull (Lai et al.)",
        params: ABC,
        survival: "exp(-a t^b exp(c t))",
        constraints: "a > 0, b > 0, c > 0 (c = 0 is weibull2); t >= 0",
        status: Verified,
        lambert: true,
        note: "published Lambert-W inverse (b/c) W[(c/b)(-ln(1-u)/a)^(1/b)] roundtrips",
    },
    FamilyInfo {
        id: FamilyId::InvModWeibull,
        title: "Inverse modified Weibull",
        params: ABC,
        survival: "1 - exp(-(a/t)^b exp(c/t))",
        constraints: "a > 0, b > 0, c > 0; t > 0",
        status: Verified,
        lambert: true,
        note: "published Lambert-W inverse (c/b) / W[(c/(b a)) (-ln u)^(1/b)] roundtrips",
    },
    FamilyInfo {
        id: FamilyId::XieLai3,
        title: "Three-parameter Weibull (Xie and Lai)",
        params: ABC,
        survival: "exp(-(a t)^b - (a t)^(1/b) - c t)",
        constraints: "a >= 0, b > 1, c > 0; t >= 0",
        status: NoClosedForm,
        lambert: false,
        note: "no closed-form or Lambert-W inverse; numeric inversion only",
    },
    FamilyInfo {
        id: FamilyId::GenModWeibull,
        title: "Generalized modified Weibull",
        params: ABCD,
        survival: "1 - [1 - exp(-a t^c exp(b t))]^d",
        constraints: "a, b, c, d > 0 (b = 0 is exp_weibull); t >= 0",
        status: Verified,
        lambert: true,
        note: "published Lambert-W inverse (c/b) W[(b/c)(-ln(1 - u^(1/d))/a)^(1/c)] roundtrips",
    },
    FamilyInfo {
        id: FamilyId::ShiftedModWeibull,
        title: "Shifted modified Weibull",
        params: ABCD,
        survival: "exp(-(a (t-d))^b exp(c (t-d)))",
        constraints: "a > 0, b > 0, c > 0, d >= 0; t >= d",
        status: Verified,
        lambert: true,
        note: "published Lambert-W inverse d + (b/c) W[c (-ln(1-u))^(1/b)/(a b)] roundtrips \
               (an intermediate step of its derivation has c/a where c/b belongs; the final form is right)",
    },
    FamilyInfo {
        id: FamilyId::AdditiveWeibull,
        title: "Additive Weibull",
        params: ABCD,
        survival: "exp(-a t^b - c t^d)",
        constraints: "a, b, c, d > 0; t >= 0",
        status: NoClosedForm,
        lambert: false,
        note: "no closed-form or Lambert-W inverse; numeric inversion only",
    },
    FamilyInfo {
        id: FamilyId::NadarajahKotz,
        title: "Nadarajah-Kotz Weibull",
        params: ABCD,
        survival: "exp(-a t^b [exp(c t^d) - 1])",
        constraints: "a > 0, d > 0, b >= 0, c > 0; t >= 0",
        status: NoClosedForm,
        lambert: false,
        note: "no closed-form or Lambert-W inverse; numeric inversion only",
    },
    FamilyInfo {
        id: FamilyId::KumModWeibull,
        title: "Kumaraswamy modified Weibull",
        params: ABCDMU,
        survival: "[1 - (1 - exp(-c t^d exp(mu t)))^a]^b",
        constraints: "a, b, c, d, mu > 0; t >= 0",
        status: Verified,
        lambert: true,
        note: "published Lambert-W inverse (d/mu) W[(mu/d){-ln(1 - [1 - (1-u)^(1/b)]^(1/a))/c}^(1/d)] roundtrips",
    },
    FamilyInfo {
        id: FamilyId::Phani5,
        title: "Five-parameter Phani Weibull",
        params: ABCDE,
        survival: "exp[-c (t-a)^d / (b-t)^e]",
        constraints: "0 <= a < b, c, d, e > 0; a <= t < b",
        status: NoClosedForm,
        lambert: false,
        note: "no quantile is published; numeric inversion only",
    },
    FamilyInfo {
        id: FamilyId::ModLogLogistic,
        title: "Modified log-logistic",
        params: ABC,
        survival: "[1 + (a t)^b exp(c t)]^(-1)",
        constraints: "a, b, c > 0; t >= 0",
        status: Verified,
        lambert: true,
        note: "published Lambert-W inverse (b/c) W[(c/(a b)) ((1-u)^(-1) - 1)^(1/b)] roundtrips",
    },
    FamilyInfo {
        id: FamilyId::GompertzMakeham,
        title: "Gompertz-Makeham",
        params: ABC,
        survival: "exp(-a t - (b/c)[exp(c t) - 1])",
        constraints: "a, b, c > 0; t >= 0",
        status: Verified,
        lambert: true,
        note: "published Lambert-W inverse ln({(a/b) W[(b/a) exp((b - c ln(1-u))/a)]}^(1/c)) roundtrips; \
               it equals (b/c - ln(1-u))/a - W(.)/c",
    },
    FamilyInfo {
        id: FamilyId::ModPowerLomax,
        title: "Modified power Lomax",
        params: ABCD,
        survival: "[1 + (a t)^b exp(c t)]^(-d)",
        constraints: "a, b, c, d > 0; t >= 0",
        status: Verified,
        lambert: true,
        note: "published Lambert-W inverse (b/c) W[(c/(a b)) ((1-u)^(-1/d) - 1)^(1/b)] roundtrips",
    },
    FamilyInfo {
        id: FamilyId::ModPareto4,
        title: "Modified Pareto IV",
        params: ABCDMU,
        survival: "[1 + (a (t-mu))^(1/b) exp(c (t-mu))]^(-d)",
        constraints: "a, b, c, d > 0, mu >= 0; t >= mu",
        status: Corrected,
        lambert: true,
        note: "published inverse drops the factor c b / a inside W; \
               implemented t = mu + W[(c b/a) ((1-u)^(-1/d) - 1)^b]/(c b)",
    },
    FamilyInfo {
        id: FamilyId::ModLognormal,
        title: "Modified lognormal",
        params: ABCDMU,
        survival: "1 - Phi((ln[(a t)^b exp(c t)] - d)/mu)",
        constraints: "a, b, c, mu > 0, d real; t > 0",
        status: Corrected,
        lambert: true,
        note: "published inverse is built on Phi with lower integration limit 0, whose inverse exists only for u < 1/2; \
               implemented with the standard normal CDF and ln of the product, \
               t = (b/c) W[(c/(a b)) exp((mu Phi^-1(u) + d)/b)]",
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_indexed_by_discriminant() {
        for id in FamilyId::ALL {
            assert_eq!(id.info().id, id);
            assert_eq!(id.as_str().parse::<FamilyId>().unwrap(), id);
        }
    }

    #[test]
    fn identifiers_are_unique() {
        let mut names: Vec<_> = FamilyId::ALL.iter().map(|f| f.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 28);
    }

    #[test]
    fn exactly_four_numeric_only_families() {
        let numeric: Vec<_> = FamilyId::ALL
            .into_iter()
            .filter(|f| !f.has_analytic_quantile())
            .collect();
        assert_eq!(
            numeric,
            [
                FamilyId::XieLai3,
                FamilyId::AdditiveWeibull,
                FamilyId::NadarajahKotz,
                FamilyId::Phani5
            ]
        );
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(matches!(
            "weibull3".parse::<FamilyId>(),
            Err(Error::UnknownFamily(_))
        ));
    }
}
