use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A partial flag manifold `F(n_1,...,n_l,n)`: subspaces of dimensions
/// `n_1 < ... < n_l` nested inside an `n`-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagShape {
    steps: Vec<usize>,
    ambient: usize,
}

impl FlagShape {
    pub fn new(steps: &[usize], ambient: usize) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidShape("at least one step is required".into()));
        }
        if steps[0] == 0 {
            return Err(Error::InvalidShape("steps must be positive".into()));
        }
        if let Some(w) = steps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidShape(format!(
                "steps must be strictly increasing, got {} before {}",
                w[0], w[1]
            )));
        }
        let last = *steps.last().unwrap();
        if last >= ambient {
            return Err(Error::InvalidShape(format!(
                "largest step {last} must be below the ambient dimension {ambient}"
            )));
        }
        Ok(FlagShape {
            steps: steps.to_vec(),
            ambient,
        })
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of steps `l`.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `n_i` with the conventions `n_0 = 0` and `n_{l+1} = n`.
    pub fn step(&self, i: usize) -> usize {
        match i {
            0 => 0,
            i if i <= self.steps.len() => self.steps[i - 1],
            _ => self.ambient,
        }
    }

    /// Block sizes `k_j = n_j - n_{j-1}` for `j = 1..=l+1`.
    pub fn blocks(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .map(|j| self.step(j) - self.step(j - 1))
            .collect()
    }

    /// Complex dimension `sum_i k_i (n - n_i)`.
    pub fn dimension(&self) -> usize {
        (1..=self.len())
            .map(|i| (self.step(i) - self.step(i - 1)) * (self.ambient - self.step(i)))
            .sum()
    }

    /// Coefficients of the anticanonical class in the Schubert divisor basis,
    /// `n_{i+1} - n_{i-1} = k_i + k_{i+1}`.
    pub fn anticanonical(&self) -> Vec<usize> {
        (1..=self.len())
            .map(|i| self.step(i + 1) - self.step(i - 1))
            .collect()
    }

    /// The isomorphic shape `F(n-n_l,...,n-n_1,n)`.
    pub fn dual(&self) -> FlagShape {
        let steps = self.steps.iter().rev().map(|s| self.ambient - s).collect();
        FlagShape {
            steps,
            ambient: self.ambient,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// Projective spaces `F(1,n)` and `F(n-1,n)`.
    pub fn is_projective_space(&self) -> bool {
        self.len() == 1 && (self.steps[0] == 1 || self.steps[0] + 1 == self.ambient)
    }

    /// The `(1,1)` hypersurfaces `F(1,n-1,n)` in a product of two projective spaces.
    pub fn is_point_hyperplane_incidence(&self) -> bool {
        self.len() == 2 && self.steps[0] == 1 && self.steps[1] + 1 == self.ambient
    }
}

impl fmt::Display for FlagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("F(")?;
        for s in &self.steps {
            write!(f, "{s},")?;
        }
        write!(f, "{})", self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_from_steps() {
        assert_eq!(FlagShape::new(&[2], 5).unwrap().blocks(), [2, 3]);
        assert_eq!(
            FlagShape::new(&[1, 2, 3], 4).unwrap().blocks(),
            [1, 1, 1, 1]
        );
    }

    #[test]
    fn rejects_bad_steps() {
        assert!(matches!(
            FlagShape::new(&[2, 1], 5),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            FlagShape::new(&[5], 5),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            FlagShape::new(&[0, 2], 5),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            FlagShape::new(&[], 5),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            FlagShape::new(&[2, 2], 5),
            Err(Error::InvalidShape(_))
        ));
    }

    #[test]
    fn dimensions() {
        assert_eq!(FlagShape::new(&[2], 5).unwrap().dimension(), 6);
        assert_eq!(FlagShape::new(&[1, 2, 6], 7).unwrap().dimension(), 15);
        assert_eq!(FlagShape::new(&[1], 2).unwrap().dimension(), 1);
    }

    #[test]
    fn anticanonical_and_dual() {
        let f = FlagShape::new(&[1, 2], 5).unwrap();
        assert_eq!(f.anticanonical(), [2, 4]);
        assert_eq!(f.dual(), FlagShape::new(&[3, 4], 5).unwrap());
        assert!(FlagShape::new(&[1, 2, 3], 4).unwrap().is_self_dual());
        assert_eq!(f.to_string(), "F(1,2,5)");
    }
}
