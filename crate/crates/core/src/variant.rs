use serde::{Deserialize, Serialize};

/// Phrase encoding shape: pairs (length, offset) or triples
/// (length, offset, trailing letter).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Pairs,
    Triples,
}

/// Whether a phrase may overlap its earlier occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overlap {
    Allowed,
    Forbidden,
}

/// One of the four parsing variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variant {
    pub shape: Shape,
    pub overlap: Overlap,
}

impl Variant {
    pub const LZ: Variant = Variant {
        shape: Shape::Pairs,
        overlap: Overlap::Allowed,
    };
    pub const NOV_LZ: Variant = Variant {
        shape: Shape::Pairs,
        overlap: Overlap::Forbidden,
    };
    pub const LZ3: Variant = Variant {
        shape: Shape::Triples,
        overlap: Overlap::Allowed,
    };
    pub const NOV_LZ3: Variant = Variant {
        shape: Shape::Triples,
        overlap: Overlap::Forbidden,
    };

    /// All four variants, in the conventional order lz, novlz, lz3, novlz3.
    pub const ALL: [Variant; 4] = [Self::LZ, Self::NOV_LZ, Self::LZ3, Self::NOV_LZ3];

    pub fn name(&self) -> &'static str {
        match (self.shape, self.overlap) {
            (Shape::Pairs, Overlap::Allowed) => "lz",
            (Shape::Pairs, Overlap::Forbidden) => "novlz",
            (Shape::Triples, Overlap::Allowed) => "lz3",
            (Shape::Triples, Overlap::Forbidden) => "novlz3",
        }
    }

    pub fn from_name(name: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::from_name(s).ok_or_else(|| format!("unknown variant `{s}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for v in Variant::ALL {
            assert_eq!(Variant::from_name(v.name()), Some(v));
        }
        assert_eq!(Variant::from_name("lz78"), None);
    }
}
