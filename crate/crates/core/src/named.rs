//! Builders for the named families. Dihedral and quaternion groups are named
//! by their order: `D8` is the dihedral group of order 8.

use crate::error::{Error, Result};
use crate::group::{Family, Group, GroupParts, Provenance};
use crate::perm::{Perm, PermutationGenSet};

/// Builds `family(n)` subject to `order_cap`.
pub fn named_group(family: Family, n: usize, order_cap: usize) -> Result<Group> {
    let parts = || GroupParts::new(format!("{}{}", family.symbol(), param_text(family, n)), Provenance::NamedFamily(family, n));
    let cap = |order: usize| {
        if order > order_cap {
            Err(Error::OrderCapExceeded { order, cap: order_cap })
        } else {
            Ok(())
        }
    };
    match family {
        Family::Cyclic => {
            if n == 0 {
                return Err(Error::bad_parameter("C", "order must be positive"));
            }
            cap(n)?;
            Ok(Group::from_rule(parts(), n, move |a, b| (a + b) % n, move |a| (n - a) % n))
        }
        Family::Dihedral => {
            if n < 4 || !n.is_multiple_of(2) {
                return Err(Error::bad_parameter("D", format!("order {n} is not an even number >= 4")));
            }
            cap(n)?;
            let m = n / 2;
            // index = i + m*j for r^i s^j
            let mul = move |a: usize, b: usize| {
                let (i, j, k, l) = (a % m, a / m, b % m, b / m);
                let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                rot + m * ((j + l) % 2)
            };
            let inv = move |a: usize| if a < m { (m - a) % m } else { a };
            Ok(Group::from_rule(parts(), n, mul, inv))
        }
        Family::Quaternion => {
            if n < 8 || !n.is_power_of_two() {
                return Err(Error::bad_parameter("Q", format!("order {n} is not a power of two >= 8")));
            }
            cap(n)?;
            let m = n / 2;
            // index = i + m*j for x^i y^j; x^m = 1, y^2 = x^(m/2), x^y = x^-1
            let mul = move |a: usize, b: usize| {
                let (i, j, k, l) = (a % m, a / m, b % m, b / m);
                if j == 0 {
                    (i + k) % m + m * l
                } else if l == 0 {
                    (i + m - k) % m + m
                } else {
                    (i + m - k + m / 2) % m
                }
            };
            let inv = move |a: usize| if a < m { (m - a) % m } else { (a - m + m / 2) % m + m };
            Ok(Group::from_rule(parts(), n, mul, inv))
        }
        Family::Symmetric | Family::Alternating => {
            if n == 0 {
                return Err(Error::bad_parameter(family.symbol(), "degree must be positive"));
            }
            let order = if family == Family::Symmetric { factorial(n) } else { (factorial(n) / 2).max(1) };
            cap(order)?;
            let gens = if family == Family::Symmetric { symmetric_gens(n) } else { alternating_gens(n) };
            Group::from_permutations_named(&gens, order_cap, parts())
        }
        Family::Unitriangular => {
            if n < 2 {
                return Err(Error::bad_parameter("UT", "dimension must be at least 2"));
            }
            let bits = n * (n - 1) / 2;
            if bits >= usize::BITS as usize - 1 {
                return Err(Error::OrderCapExceeded { order: usize::MAX, cap: order_cap });
            }
            cap(1 << bits)?;
            let ut = Unitriangular::new(n);
            let inv_ut = ut.clone();
            Ok(Group::from_rule(parts(), 1 << bits, move |a, b| ut.mul(a, b), move |a| inv_ut.inv(a)))
        }
    }
}

fn param_text(family: Family, n: usize) -> String {
    match family {
        Family::Unitriangular => format!("({n},2)"),
        _ => n.to_string(),
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX)
}

fn symmetric_gens(n: usize) -> PermutationGenSet {
    let gens = if n == 1 {
        vec![Perm::identity(1)]
    } else {
        vec![
            Perm::from_cycles(n, &[vec![1, 2]]).expect("valid"),
            Perm::from_cycles(n, &[(1..=n).collect()]).expect("valid"),
        ]
    };
    PermutationGenSet::new(n, gens).expect("valid")
}

fn alternating_gens(n: usize) -> PermutationGenSet {
    let gens = if n < 3 {
        vec![Perm::identity(n)]
    } else {
        (3..=n).map(|k| Perm::from_cycles(n, &[vec![1, 2, k]]).expect("valid")).collect()
    };
    PermutationGenSet::new(n, gens).expect("valid")
}

/// Upper unitriangular matrices over GF(2). An element is encoded by the bits
/// of its above-diagonal entries in row-major order.
#[derive(Clone, Debug)]
pub struct Unitriangular {
    n: usize,
}

impl Unitriangular {
    pub fn new(n: usize) -> Self {
        Unitriangular { n }
    }

    /// Bit position of entry `(i, j)`, 0-based with `i < j`.
    pub fn bit(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        // rows above i contribute (n-1) + (n-2) + ... + (n-i) entries
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Rows as bitmasks over columns, with the diagonal set.
    pub fn rows(&self, x: usize) -> Vec<u64> {
        (0..self.n)
            .map(|i| {
                let mut row = 1u64 << i;
                for j in i + 1..self.n {
                    if x >> self.bit(i, j) & 1 == 1 {
                        row |= 1 << j;
                    }
                }
                row
            })
            .collect()
    }

    pub fn encode(&self, rows: &[u64]) -> usize {
        let mut x = 0;
        for (i, row) in rows.iter().enumerate().take(self.n) {
            for j in i + 1..self.n {
                if row >> j & 1 == 1 {
                    x |= 1 << self.bit(i, j);
                }
            }
        }
        x
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.rows(a), self.rows(b));
        let prod: Vec<u64> = ra
            .iter()
            .map(|&row| (0..self.n).filter(|&k| row >> k & 1 == 1).fold(0u64, |acc, k| acc ^ rb[k]))
            .collect();
        self.encode(&prod)
    }

    pub fn inv(&self, a: usize) -> usize {
        // a^-1 = a^(k-1) for k the order of a
        let (mut x, mut prev) = (a, 0);
        while x != 0 {
            prev = x;
            x = self.mul(x, a);
        }
        prev
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    fn named(f: Family, n: usize) -> Group {
        named_group(f, n, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn orders_of_families() {
        assert_eq!(named(Family::Cyclic, 1).order(), 1);
        assert_eq!(named(Family::Symmetric, 4).order(), 24);
        assert_eq!(named(Family::Alternating, 4).order(), 12);
        assert_eq!(named(Family::Alternating, 5).order(), 60);
        assert_eq!(named(Family::Dihedral, 12).order(), 12);
        assert_eq!(named(Family::Quaternion, 16).order(), 16);
        assert_eq!(named(Family::Unitriangular, 3).order(), 8);
        assert_eq!(named(Family::Unitriangular, 5).order(), 1024);
    }

    #[test]
    fn all_named_groups_satisfy_axioms() {
        for (f, n) in [
            (Family::Cyclic, 7),
            (Family::Dihedral, 8),
            (Family::Dihedral, 4),
            (Family::Quaternion, 8),
            (Family::Quaternion, 32),
            (Family::Symmetric, 1),
            (Family::Symmetric, 4),
            (Family::Alternating, 2),
            (Family::Alternating, 4),
            (Family::Unitriangular, 4),
        ] {
            named(f, n).validate().unwrap_or_else(|e| panic!("{f:?}{n}: {e}"));
        }
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q = named(Family::Quaternion, 8);
        let involutions = q.elements().filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn bad_parameters() {
        assert!(named_group(Family::Dihedral, 6 + 1, DEFAULT_ORDER_CAP).is_err());
        assert!(named_group(Family::Dihedral, 2, DEFAULT_ORDER_CAP).is_err());
        assert!(named_group(Family::Quaternion, 12, DEFAULT_ORDER_CAP).is_err());
        assert!(named_group(Family::Unitriangular, 1, DEFAULT_ORDER_CAP).is_err());
        assert!(matches!(named_group(Family::Unitriangular, 6, DEFAULT_ORDER_CAP), Err(Error::OrderCapExceeded { .. })));
        assert!(matches!(named_group(Family::Symmetric, 8, DEFAULT_ORDER_CAP), Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn unitriangular_bits_cover_positions() {
        let ut = Unitriangular::new(5);
        let mut seen = vec![];
        for i in 0..5 {
            for j in i + 1..5 {
                seen.push(ut.bit(i, j));
            }
        }
        assert_eq!(seen, (0..10).collect::<Vec<_>>());
    }
}
