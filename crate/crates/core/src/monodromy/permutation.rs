use std::fmt;

use num_integer::Integer;

use super::MonodromyError;

/// A permutation of the sheets `0..n`, stored as its image list.
///
/// Products are read left to right: `a.then(&b)` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self, MonodromyError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(MonodromyError::NotAPermutation(n));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n as u32).collect() }
    }

    /// Build from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self, MonodromyError> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a as usize >= n || b as usize >= n {
                    return Err(MonodromyError::PointOutOfRange { point: a.max(b), degree: n });
                }
                if std::mem::replace(&mut touched[a as usize], true) {
                    return Err(MonodromyError::NotAPermutation(n));
                }
                images[a as usize] = b;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), next.degree());
        Permutation { images: self.images.iter().map(|&x| next.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `g⁻¹ · self · g`, i.e. `self` with sheets relabelled by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Permutation::identity(self.degree()), |acc, _| acc.then(self))
    }

    /// All cycles, fixed points included, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start as u32;
            while !seen[x as usize] {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in non-increasing order; they sum to the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Riemann–Hurwitz contribution `Σ (len(c) − 1)` over the cycles.
    pub fn index(&self) -> usize {
        self.degree() - self.cycles().len()
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, |acc, l| acc.lcm(&l))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let body: Vec<String> = cycle.iter().map(u32::to_string).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 5]]).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(b.then(&a).apply(0), 1);
        assert!(a.then(&a).is_identity());
        assert!(a.then(&b).then(&a.then(&b).inverse()).is_identity());
    }

    #[test]
    fn cycle_data() {
        let p = Permutation::from_cycles(5, &[vec![0, 4], vec![1, 3]]).unwrap();
        assert_eq!(p.cycle_type(), vec![2, 2, 1]);
        assert_eq!(p.index(), 2);
        assert_eq!(p.order(), 2);
        assert_eq!(p.to_string(), "(0 4)(1 3)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let c = Permutation::from_cycles(6, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(c.order(), 6);
        assert!(c.pow(6).is_identity());
        assert!(!c.pow(3).is_identity());
    }
}
