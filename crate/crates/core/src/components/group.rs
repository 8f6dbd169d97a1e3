use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Bits;

/// Hermitian groups of tube type, plus an opaque split real form for the Teichmüller count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GroupDescriptor {
    /// `Sp(2n, R)`.
    Sp2nR { n: u32 },
    /// `SU(n, n)`.
    SUnn { n: u32 },
    /// `SO*(2n)`, `n` even.
    SOStar2n { n: u32 },
    /// `SO_0(2, n)`, `n >= 3`.
    SO02n { n: u32 },
    E7Minus25,
    /// Some split real form, known only by name.
    Split { name: String },
}

impl GroupDescriptor {
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupDescriptor::Sp2nR { n } | GroupDescriptor::SUnn { n } if *n == 0 => {
                Err(Error::UnknownGroup(format!("{self}: rank must be positive")))
            }
            GroupDescriptor::SOStar2n { n } if *n == 0 || n % 2 != 0 => {
                Err(Error::UnknownGroup(format!("SO*(2n) needs n even and positive, got n = {n}")))
            }
            GroupDescriptor::SO02n { n } if *n < 3 => {
                Err(Error::UnknownGroup(format!("SO_0(2,n) needs n >= 3, got n = {n}")))
            }
            GroupDescriptor::Split { name } if name.is_empty() => Err(Error::UnknownGroup("empty split group name".into())),
            _ => Ok(()),
        }
    }

    /// Short identifier accepted by [`FromStr`].
    pub fn id(&self) -> String {
        match self {
            GroupDescriptor::Sp2nR { n } => format!("sp{}", 2 * n),
            GroupDescriptor::SUnn { n } => format!("su{n}"),
            GroupDescriptor::SOStar2n { n } => format!("sostar{}", 2 * n),
            GroupDescriptor::SO02n { n } => format!("so0_2_{n}"),
            GroupDescriptor::E7Minus25 => "e7".into(),
            GroupDescriptor::Split { name } => format!("split:{name}"),
        }
    }

    /// Split real form of a complex simple group (adjoint type).
    pub fn is_split(&self) -> bool {
        match self {
            GroupDescriptor::Sp2nR { .. } | GroupDescriptor::Split { .. } => true,
            // SU(1,1) = Sp(2,R); SO_0(2,3) = SO(3,2) up to cover.
            GroupDescriptor::SUnn { n } => *n == 1,
            GroupDescriptor::SO02n { n } => *n == 3,
            GroupDescriptor::SOStar2n { .. } | GroupDescriptor::E7Minus25 => false,
        }
    }

    /// Real rank of the symmetric space; the Milnor–Wood bound is `rank·(g-1+s/2)`.
    pub fn real_rank(&self) -> Option<u32> {
        match self {
            GroupDescriptor::Sp2nR { n } | GroupDescriptor::SUnn { n } => Some(*n),
            GroupDescriptor::SOStar2n { n } => Some(n / 2),
            GroupDescriptor::SO02n { .. } => Some(2),
            GroupDescriptor::E7Minus25 => Some(3),
            GroupDescriptor::Split { .. } => None,
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Sp2nR { n } => write!(f, "Sp({},R)", 2 * n),
            GroupDescriptor::SUnn { n } => write!(f, "SU({n},{n})"),
            GroupDescriptor::SOStar2n { n } => write!(f, "SO*({})", 2 * n),
            GroupDescriptor::SO02n { n } => write!(f, "SO0(2,{n})"),
            GroupDescriptor::E7Minus25 => write!(f, "E7(-25)"),
            GroupDescriptor::Split { name } => write!(f, "{name}"),
        }
    }
}

fn parse_num(s: &str, what: &str) -> Result<u32> {
    s.parse().map_err(|_| Error::UnknownGroup(format!("bad {what} in group name: {s:?}")))
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Accepts `sp<2n>`, `su<n>`, `sostar<2n>`, `so0_2_<n>` (also `so2<n>`), `e7` and
    /// `split:<name>`, case-insensitively.
    fn from_str(raw: &str) -> Result<Self> {
        let s = raw.trim().to_ascii_lowercase();
        let g = if let Some(name) = raw.trim().strip_prefix("split:") {
            GroupDescriptor::Split { name: name.to_string() }
        } else if s == "e7" || s == "e7-25" || s == "e7_-25" {
            GroupDescriptor::E7Minus25
        } else if let Some(rest) = s.strip_prefix("sostar") {
            let two_n = parse_num(rest, "rank")?;
            if two_n % 2 != 0 {
                return Err(Error::UnknownGroup(format!("SO*({two_n}) needs an even argument")));
            }
            GroupDescriptor::SOStar2n { n: two_n / 2 }
        } else if let Some(rest) = s.strip_prefix("so0_2_") {
            GroupDescriptor::SO02n { n: parse_num(rest, "rank")? }
        } else if let Some(rest) = s.strip_prefix("so2") {
            GroupDescriptor::SO02n { n: parse_num(rest, "rank")? }
        } else if let Some(rest) = s.strip_prefix("sp") {
            let two_n = parse_num(rest, "rank")?;
            if two_n % 2 != 0 {
                return Err(Error::UnknownGroup(format!("Sp({two_n},R) needs an even argument")));
            }
            GroupDescriptor::Sp2nR { n: two_n / 2 }
        } else if let Some(rest) = s.strip_prefix("su") {
            GroupDescriptor::SUnn { n: parse_num(rest, "rank")? }
        } else {
            return Err(Error::UnknownGroup(format!("unknown group {raw:?}")));
        };
        g.validate()?;
        Ok(g)
    }
}

impl TryFrom<String> for GroupDescriptor {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GroupDescriptor> for String {
    fn from(g: GroupDescriptor) -> String {
        g.id()
    }
}

/// Which moduli space is being counted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CountMode {
    /// Union over all parabolic structures with weights in `{0, 1/2}`.
    MaxUnion,
    /// Fixed parabolic structure: `alpha[i] = 1` means weight `1/2` at the `i`-th point.
    FixedAlpha { alpha: Bits },
    /// Punctured surface, no orbifold structure.
    Punctured,
    /// The maximal union at `s = 1`, compared with the closed-surface count.
    NonparabolicS1,
    /// `K(D)`-twisted, non-parabolic, `s = 1`.
    KdTwistedS1,
}

impl CountMode {
    pub fn name(&self) -> &'static str {
        match self {
            CountMode::MaxUnion => "max_union",
            CountMode::FixedAlpha { .. } => "max_fixed_alpha",
            CountMode::Punctured => "punctured",
            CountMode::NonparabolicS1 => "nonparabolic_s1",
            CountMode::KdTwistedS1 => "nonparabolic_kd_twisted_s1",
        }
    }

    /// Parse a mode name; `alpha` is a bit string like `"0110"` and is only used for fixed modes.
    pub fn parse(mode: &str, alpha: Option<&str>) -> Result<Self> {
        match mode {
            "max" | "max_union" => Ok(CountMode::MaxUnion),
            "fixed" | "fixed_alpha" | "max_fixed_alpha" => {
                let a = alpha.ok_or_else(|| Error::InvalidInput("fixed-alpha mode needs an alpha bit string".into()))?;
                Ok(CountMode::FixedAlpha { alpha: parse_bits(a)? })
            }
            "punctured" => Ok(CountMode::Punctured),
            "s1" | "nonparabolic_s1" => Ok(CountMode::NonparabolicS1),
            "kd_s1" | "kd_twisted_s1" | "nonparabolic_kd_twisted_s1" => Ok(CountMode::KdTwistedS1),
            other => Err(Error::InvalidInput(format!("unknown mode {other:?}"))),
        }
    }
}

/// `"0110"` to `[0, 1, 1, 0]`. Empty string is the empty vector.
pub fn parse_bits(s: &str) -> Result<Bits> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::InvalidInput(format!("bit string {s:?} may contain only 0 and 1"))),
        })
        .collect()
}

pub fn bits_string(b: &[u8]) -> String {
    b.iter().map(|&x| if x == 0 { '0' } else { '1' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aliases() {
        assert_eq!("sp4".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::Sp2nR { n: 2 });
        assert_eq!("so23".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::SO02n { n: 3 });
        assert_eq!("so0_2_5".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::SO02n { n: 5 });
        assert_eq!("sostar8".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::SOStar2n { n: 4 });
        assert_eq!("E7".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::E7Minus25);
        assert_eq!("split:G2".parse::<GroupDescriptor>().unwrap(), GroupDescriptor::Split { name: "G2".into() });
        assert!("sostar6".parse::<GroupDescriptor>().is_err());
        assert!("so22".parse::<GroupDescriptor>().is_err());
        assert!("sp3".parse::<GroupDescriptor>().is_err());
        assert!("gl2".parse::<GroupDescriptor>().is_err());
    }

    #[test]
    fn id_round_trip() {
        for s in ["sp2", "sp6", "su3", "sostar4", "so0_2_4", "e7", "split:SL3"] {
            let g: GroupDescriptor = s.parse().unwrap();
            assert_eq!(g.id().parse::<GroupDescriptor>().unwrap(), g);
        }
    }

    #[test]
    fn modes() {
        assert_eq!(CountMode::parse("fixed", Some("011")).unwrap(), CountMode::FixedAlpha { alpha: vec![0, 1, 1] });
        assert!(CountMode::parse("fixed", None).is_err());
        assert!(parse_bits("012").is_err());
        assert_eq!(bits_string(&[1, 0]), "10");
    }
}
