use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{MonodromyError, Permutation};

/// Default cap on the number of elements enumerated when closing a set of
/// generators.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Cyclic,
    Dihedral,
    Symmetric,
    Other,
}

/// A finite permutation group given by the full list of its elements.
///
/// Elements are kept sorted, so the identity comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescriptor {
    degree: usize,
    elements: Vec<Permutation>,
    classification: Classification,
}

impl GroupDescriptor {
    /// Close `generators` under composition, enumerating at most
    /// `max_order` elements.
    pub fn generated_by(
        degree: usize,
        generators: &[Permutation],
        max_order: usize,
    ) -> Result<Self, MonodromyError> {
        let identity = Permutation::identity(degree);
        let mut seen = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(h) = queue.pop_front() {
            for s in generators {
                if s.degree() != degree {
                    return Err(MonodromyError::DegreeMismatch {
                        expected: degree,
                        found: s.degree(),
                    });
                }
                let next = h.then(s);
                if !seen.contains(&next) {
                    if seen.len() >= max_order {
                        return Err(MonodromyError::GroupTooLarge { bound: max_order });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(Self::from_sorted(degree, seen.into_iter().collect()))
    }

    /// Build from an explicit element list, checking that it is a group.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self, MonodromyError> {
        let set: BTreeSet<Permutation> = elements.into_iter().collect();
        if !set.contains(&Permutation::identity(degree)) {
            return Err(MonodromyError::NotAGroup);
        }
        for a in &set {
            if a.degree() != degree {
                return Err(MonodromyError::DegreeMismatch { expected: degree, found: a.degree() });
            }
            for b in &set {
                if !set.contains(&a.then(b)) {
                    return Err(MonodromyError::NotAGroup);
                }
            }
        }
        Ok(Self::from_sorted(degree, set.into_iter().collect()))
    }

    fn from_sorted(degree: usize, elements: Vec<Permutation>) -> Self {
        let classification = classify(degree, &elements);
        Self { degree, elements, classification }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn classification(&self) -> Classification {
        self.classification
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &GroupDescriptor) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// The cyclic subgroup of index two in a dihedral group.
    pub fn rotation_subgroup(&self) -> Option<GroupDescriptor> {
        if self.classification != Classification::Dihedral {
            return None;
        }
        let m = self.order() / 2;
        let r = self.elements.iter().find(|e| e.order() == m)?;
        GroupDescriptor::generated_by(self.degree, std::slice::from_ref(r), self.order()).ok()
    }
}

fn classify(degree: usize, elements: &[Permutation]) -> Classification {
    let n = elements.len();
    if elements.iter().any(|e| e.order() == n) {
        return Classification::Cyclic;
    }
    if is_dihedral(elements) {
        return Classification::Dihedral;
    }
    let factorial: Option<usize> = (1..=degree).try_fold(1usize, |acc, k| acc.checked_mul(k));
    if factorial == Some(n) {
        return Classification::Symmetric;
    }
    Classification::Other
}

/// Order `2m` with `m ≥ 3`, a rotation `r` of order `m`, and an involution
/// `s ∉ ⟨r⟩` with `s r s = r⁻¹`.
fn is_dihedral(elements: &[Permutation]) -> bool {
    let n = elements.len();
    if n % 2 != 0 || n < 6 {
        return false;
    }
    let m = n / 2;
    for r in elements.iter().filter(|e| e.order() == m) {
        let rotations: BTreeSet<Permutation> = (0..m).map(|k| r.pow(k)).collect();
        let r_inv = r.inverse();
        let found = elements.iter().any(|s| {
            !rotations.contains(s) && s.then(s).is_identity() && s.then(r).then(s) == r_inv
        });
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn s3_is_classified_dihedral() {
        let g = GroupDescriptor::generated_by(3, &[perm(3, &[&[0, 1]]), perm(3, &[&[1, 2]])], 100)
            .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.classification(), Classification::Dihedral);
        let rot = g.rotation_subgroup().unwrap();
        assert_eq!(rot.order(), 3);
        assert_eq!(rot.classification(), Classification::Cyclic);
    }

    #[test]
    fn s4_quaternion_like_and_klein_four() {
        let s4 = GroupDescriptor::generated_by(4, &[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])], 100)
            .unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.classification(), Classification::Symmetric);

        let v4 = GroupDescriptor::generated_by(
            4,
            &[perm(4, &[&[0, 1], &[2, 3]]), perm(4, &[&[0, 2], &[1, 3]])],
            100,
        )
        .unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.classification(), Classification::Other);

        // D4 acting on the square's vertices
        let d4 = GroupDescriptor::generated_by(4, &[perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[1, 3]])], 100)
            .unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.classification(), Classification::Dihedral);

        let a4 = GroupDescriptor::generated_by(4, &[perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])], 100)
            .unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.classification(), Classification::Other);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let gens = [perm(5, &[&[0, 1]]), perm(5, &[&[0, 1, 2, 3, 4]])];
        assert_eq!(
            GroupDescriptor::generated_by(5, &gens, 50),
            Err(MonodromyError::GroupTooLarge { bound: 50 })
        );
        assert_eq!(GroupDescriptor::generated_by(5, &gens, 120).unwrap().order(), 120);
    }

    #[test]
    fn from_elements_checks_closure() {
        let t = perm(3, &[&[0, 1]]);
        let c = perm(3, &[&[0, 1, 2]]);
        assert!(GroupDescriptor::from_elements(3, vec![Permutation::identity(3), t.clone()]).is_ok());
        assert_eq!(
            GroupDescriptor::from_elements(3, vec![Permutation::identity(3), c]),
            Err(MonodromyError::NotAGroup)
        );
        assert_eq!(GroupDescriptor::from_elements(3, vec![t]), Err(MonodromyError::NotAGroup));
    }
}
