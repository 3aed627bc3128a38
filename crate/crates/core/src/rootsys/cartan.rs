//! Cartan data for the simple types, Bourbaki labeling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// Whether `(self, rank)` names a simple type.
    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn positive_root_count(self, rank: usize) -> usize {
        let l = rank;
        match self {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn weyl_order(self, rank: usize) -> BigUint {
        let factorial = |n: usize| (1..=n).fold(BigUint::one(), |acc, k| acc * k);
        match self {
            Family::A => factorial(rank + 1),
            Family::B | Family::C => factorial(rank) << rank,
            Family::D => factorial(rank) << (rank - 1),
            Family::E => BigUint::from(match rank {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => BigUint::from(1152u32),
            Family::G => BigUint::from(12u32),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Family::from_letter(c).ok_or(()),
            _ => Err(()),
        }
    }
}

/// Cartan matrix with `A[i][j] = <alpha_j, alpha_i> = 2(alpha_j, alpha_i)/(alpha_i, alpha_i)`.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    if !family.admits_rank(rank) {
        return Err(Error::InvalidType {
            family: family.letter(),
            rank,
        });
    }
    let l = rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => (0..l - 1).for_each(|i| bond(i, i + 1)),
        Family::D => {
            (0..l - 2).for_each(|i| bond(i, i + 1));
            bond(l - 3, l - 1);
        }
        Family::E => {
            // 1-3-4-5-6(-7(-8)), with 2 attached to 4
            bond(0, 2);
            bond(1, 3);
            (2..l - 1).for_each(|i| bond(i, i + 1));
        }
        Family::F => (0..3).for_each(|i| bond(i, i + 1)),
        Family::G => bond(0, 1),
    }
    match family {
        // alpha_l short
        Family::B => a[l - 1][l - 2] = -2,
        // alpha_l long
        Family::C => a[l - 2][l - 1] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        Family::F => a[2][1] = -2,
        // alpha_1 short, alpha_2 long
        Family::G => a[0][1] = -3,
        _ => {}
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_types_outside_the_table() {
        for (f, r) in [
            (Family::E, 5),
            (Family::E, 9),
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 2),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert_eq!(
                cartan_matrix(f, r),
                Err(Error::InvalidType {
                    family: f.letter(),
                    rank: r
                })
            );
        }
    }

    #[test]
    fn rank_two_conventions() {
        assert_eq!(
            cartan_matrix(Family::B, 2).unwrap(),
            vec![vec![2, -1], vec![-2, 2]]
        );
        assert_eq!(
            cartan_matrix(Family::C, 2).unwrap(),
            vec![vec![2, -2], vec![-1, 2]]
        );
        assert_eq!(
            cartan_matrix(Family::G, 2).unwrap(),
            vec![vec![2, -3], vec![-1, 2]]
        );
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(Family::A.weyl_order(2), BigUint::from(6u32));
        assert_eq!(Family::B.weyl_order(3), BigUint::from(48u32));
        assert_eq!(Family::D.weyl_order(4), BigUint::from(192u32));
        assert_eq!(Family::E.weyl_order(8), BigUint::from(696_729_600u64));
    }
}
