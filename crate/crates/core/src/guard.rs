use crate::error::{Error, Result};

/// Environment variable that overrides every default limit at once.
pub const SIZE_GUARD_ENV: &str = "FACTORIAD_SIZE_GUARD";

/// Limits on base-category size (in morphisms) for the searches whose cost
/// explodes: third iterates of a monad, and the exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub cube: usize,
    pub enumerate_fs: usize,
    pub enumerate_strict_fs: usize,
    pub strict_algebras: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard { cube: 12, enumerate_fs: 10, enumerate_strict_fs: 12, strict_algebras: 6 }
    }
}

impl SizeGuard {
    pub fn uniform(limit: usize) -> Self {
        SizeGuard { cube: limit, enumerate_fs: limit, enumerate_strict_fs: limit, strict_algebras: limit }
    }

    /// Defaults, unless the override variable holds a number.
    pub fn from_env() -> Self {
        match std::env::var(SIZE_GUARD_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => SizeGuard::uniform(n),
            None => SizeGuard::default(),
        }
    }

    pub fn unlimited() -> Self {
        SizeGuard::uniform(usize::MAX)
    }

    pub(crate) fn require(what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::SizeGuard { what, size, limit })
        } else {
            Ok(())
        }
    }

    pub fn check_cube(&self, what: &'static str, size: usize) -> Result<()> {
        Self::require(what, size, self.cube)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_are_inclusive() {
        let g = SizeGuard::uniform(4);
        assert!(g.check_cube("x", 4).is_ok());
        assert!(matches!(g.check_cube("x", 5), Err(Error::SizeGuard { size: 5, limit: 4, .. })));
        assert!(SizeGuard::unlimited().check_cube("x", usize::MAX).is_ok());
    }
}
