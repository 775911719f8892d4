use std::collections::{BTreeMap, VecDeque};

use super::{GroupDescriptor, MonodromyError, Permutation};

/// A connected branched cover of a curve of genus `base_genus`, described by
/// its local monodromy around each branch point.
///
/// Invariants checked on construction: every branch permutation acts on
/// `degree` sheets and is not the identity, the product `σ₁·σ₂·…·σ_k`
/// (left to right) is the identity, and the generated group is transitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchedCover {
    degree: usize,
    base_genus: u64,
    monodromy: Vec<Permutation>,
}

impl BranchedCover {
    pub fn new(
        degree: usize,
        base_genus: u64,
        monodromy: Vec<Permutation>,
    ) -> Result<Self, MonodromyError> {
        if degree == 0 {
            return Err(MonodromyError::ZeroDegree);
        }
        for (i, s) in monodromy.iter().enumerate() {
            if s.degree() != degree {
                return Err(MonodromyError::DegreeMismatch { expected: degree, found: s.degree() });
            }
            if s.is_identity() {
                return Err(MonodromyError::IdentityBranch(i));
            }
        }
        // Over a base of positive genus the handle generators are taken to
        // act trivially, so the same relation and transitivity apply.
        let product = monodromy
            .iter()
            .fold(Permutation::identity(degree), |acc, s| acc.then(s));
        if !product.is_identity() {
            return Err(MonodromyError::ProductNotIdentity);
        }
        let cover = Self { degree, base_genus, monodromy };
        if !cover.is_transitive() {
            return Err(MonodromyError::NotTransitive);
        }
        Ok(cover)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base_genus(&self) -> u64 {
        self.base_genus
    }

    pub fn monodromy(&self) -> &[Permutation] {
        &self.monodromy
    }

    fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.degree];
        seen[0] = true;
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for s in &self.monodromy {
                let y = s.apply(x);
                if !std::mem::replace(&mut seen[y as usize], true) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Genus of the covering curve by Riemann–Hurwitz:
    /// `2g − 2 = n(2b − 2) + Σᵢ Σ_c (len(c) − 1)`.
    pub fn rh_genus(&self) -> Result<u64, MonodromyError> {
        riemann_hurwitz(
            self.degree,
            self.base_genus,
            self.monodromy.iter().map(Permutation::index).sum(),
        )
    }

    /// Multiset of cycle lengths over each branch point.
    pub fn ramification_profile(&self) -> Vec<Vec<usize>> {
        self.monodromy.iter().map(Permutation::cycle_type).collect()
    }

    pub fn generated_group(&self, max_order: usize) -> Result<GroupDescriptor, MonodromyError> {
        GroupDescriptor::generated_by(self.degree, &self.monodromy, max_order)
    }

    /// The Galois closure as a regular cover: sheets are the elements of the
    /// monodromy group `G`, and each `σᵢ` acts by left translation
    /// `h ↦ σᵢ ∘ h`.
    pub fn galois_closure(&self, max_order: usize) -> Result<BranchedCover, MonodromyError> {
        let group = self.generated_group(max_order)?;
        let trivial = GroupDescriptor::from_elements(self.degree, vec![Permutation::identity(self.degree)])?;
        self.induced_cover(&group, &trivial)
    }

    pub fn galois_closure_genus(&self, max_order: usize) -> Result<u64, MonodromyError> {
        self.galois_closure(max_order)?.rh_genus()
    }

    /// The intermediate cover `C/K → base`, where `C` is the Galois closure
    /// and `K` a subgroup of its Galois group.
    pub fn quotient_cover(
        &self,
        subgroup: &GroupDescriptor,
        max_order: usize,
    ) -> Result<BranchedCover, MonodromyError> {
        let group = self.generated_group(max_order)?;
        if !subgroup.is_subgroup_of(&group) {
            return Err(MonodromyError::SubgroupNotContained);
        }
        self.induced_cover(&group, subgroup)
    }

    pub fn quotient_genus(
        &self,
        subgroup: &GroupDescriptor,
        max_order: usize,
    ) -> Result<u64, MonodromyError> {
        self.quotient_cover(subgroup, max_order)?.rh_genus()
    }

    /// Monodromy of `G` acting on the cosets `h ∘ K` by left translation.
    /// Branch points whose induced action is trivial are dropped; they
    /// contribute nothing to Riemann–Hurwitz.
    fn induced_cover(
        &self,
        group: &GroupDescriptor,
        subgroup: &GroupDescriptor,
    ) -> Result<BranchedCover, MonodromyError> {
        // h ∘ k in functional notation is k.then(h).
        let coset_rep = |h: &Permutation| -> Permutation {
            subgroup
                .elements()
                .iter()
                .map(|k| k.then(h))
                .min()
                .expect("subgroup contains the identity")
        };
        let mut labels: BTreeMap<Permutation, u32> = BTreeMap::new();
        for h in group.elements() {
            let rep = coset_rep(h);
            let next = labels.len() as u32;
            labels.entry(rep).or_insert(next);
        }
        let index = labels.len();

        let mut monodromy = Vec::with_capacity(self.monodromy.len());
        for s in &self.monodromy {
            let mut images = vec![0u32; index];
            for (rep, &label) in &labels {
                images[label as usize] = labels[&coset_rep(&rep.then(s))];
            }
            let induced = Permutation::new(images)?;
            if !induced.is_identity() {
                monodromy.push(induced);
            }
        }
        BranchedCover::new(index, self.base_genus, monodromy)
    }
}

/// Solve `2g − 2 = n(2b − 2) + ramification` for `g`.
pub fn riemann_hurwitz(degree: usize, base_genus: u64, ramification: usize) -> Result<u64, MonodromyError> {
    let two_g_minus_two = degree as i128 * (2 * base_genus as i128 - 2) + ramification as i128;
    if two_g_minus_two % 2 != 0 || two_g_minus_two < -2 {
        return Err(MonodromyError::MalformedGenus { euler: two_g_minus_two });
    }
    Ok((two_g_minus_two / 2 + 1) as u64)
}

/// The reflection `x ↦ a − x (mod p)` on the sheets `0..p`.
pub fn reflection(p: usize, a: usize) -> Permutation {
    let images = (0..p).map(|x| ((a + p - x) % p) as u32).collect();
    Permutation::new(images).expect("reflection is a bijection")
}

/// A degree-`p` cover with `2g + 2` branch points and dihedral monodromy:
/// the tuple `(s₁, s₁, s₀, …, s₀)` of reflections. Its product is the
/// identity, and `s₁ · s₀` is the unit rotation, so it generates `D_p`.
pub fn build_dihedral_cover(g: u64, p: u64) -> Result<BranchedCover, MonodromyError> {
    if g < 2 || !is_odd_prime(p) {
        return Err(MonodromyError::InvalidParameters { g, p });
    }
    let p = p as usize;
    let branch_points = 2 * g as usize + 2;
    let s0 = reflection(p, 0);
    let s1 = reflection(p, 1);
    let mut tuple = vec![s1.clone(), s1];
    tuple.resize(branch_points, s0);
    BranchedCover::new(p, 0, tuple)
}

pub(crate) fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
