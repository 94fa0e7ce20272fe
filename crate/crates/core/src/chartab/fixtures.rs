//! Small hand-built tables.

use std::collections::BTreeMap;

use super::{Character, CharacterTable, ClassInfo};
use crate::exact::Cyclotomic;

fn class(name: &str, order: u64, size: u64, centralizer: u64) -> ClassInfo {
    ClassInfo { name: name.to_string(), order, size, centralizer }
}

fn chi(name: &str, v: &[i64]) -> Character {
    Character::new(name, v.iter().map(|&x| Cyclotomic::from_int(x)).collect())
}

/// The symmetric group of degree 3.
pub fn s3() -> CharacterTable {
    let mut power_maps = BTreeMap::new();
    power_maps.insert(2, vec![0, 0, 2]);
    power_maps.insert(3, vec![0, 1, 0]);
    CharacterTable {
        name: "S3".into(),
        order: 6,
        prime: None,
        classes: vec![class("1A", 1, 1, 6), class("2A", 2, 3, 2), class("3A", 3, 2, 3)],
        power_maps,
        irreducibles: vec![chi("1a", &[1, 1, 1]), chi("1b", &[1, -1, 1]), chi("2a", &[2, 0, -1])],
    }
}

/// The trivial group.
pub fn trivial() -> CharacterTable {
    CharacterTable {
        name: "1".into(),
        order: 1,
        prime: None,
        classes: vec![class("1A", 1, 1, 1)],
        power_maps: BTreeMap::new(),
        irreducibles: vec![chi("1a", &[1])],
    }
}
