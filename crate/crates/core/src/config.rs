use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Enumeration caps and the seed driving every randomized search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Largest number of vectors enumerated in a single exhaustive check.
    pub enum_cap: u64,
    /// Largest number of subspaces enumerated when searching subalgebras.
    pub subspace_cap: u64,
    /// Number of random elements tried before a certificate search gives up.
    pub spin_seeds: usize,
    pub seed: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enum_cap: 1 << 16,
            subspace_cap: 5_000_000,
            spin_seeds: 64,
            seed: 0,
        }
    }
}

impl Caps {
    /// A generator determined by the seed and a call-site salt, so results do
    /// not depend on evaluation order.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}
