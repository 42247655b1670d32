use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Capture time under optimal play: a finite number of rounds, or the
/// robber evades forever. `RobberWins` is the top element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GameValue {
    Finite(u32),
    RobberWins,
}

impl GameValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(t) => Some(t),
            GameValue::RobberWins => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    /// `self + k`, absorbing at `RobberWins`.
    pub fn plus(self, k: u64) -> Option<u64> {
        self.finite().map(|t| u64::from(t) + k)
    }

    /// `k * (1 + self)`, absorbing at `RobberWins`.
    pub fn product_cost(self, k: u64) -> Option<u64> {
        self.finite().map(|t| k * (1 + u64::from(t)))
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(t) => write!(f, "{t}"),
            GameValue::RobberWins => f.write_str("inf"),
        }
    }
}

impl Serialize for GameValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GameValue::Finite(t) => s.serialize_u32(*t),
            GameValue::RobberWins => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for GameValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(t) => Ok(GameValue::Finite(t)),
            Raw::Text(s) if s == "inf" => Ok(GameValue::RobberWins),
            Raw::Text(s) => Err(serde::de::Error::custom(format!("bad game value {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_arithmetic() {
        assert!(GameValue::Finite(3) < GameValue::Finite(4));
        assert!(GameValue::Finite(u32::MAX) < GameValue::RobberWins);
        assert_eq!(GameValue::Finite(2).plus(3), Some(5));
        assert_eq!(GameValue::Finite(2).product_cost(3), Some(9));
        assert_eq!(GameValue::RobberWins.plus(1), None);
    }

    #[test]
    fn serde_form() {
        let v = vec![GameValue::Finite(2), GameValue::RobberWins];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[2,\"inf\"]");
        let back: Vec<GameValue> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<GameValue>("\"x\"").is_err());
    }
}
