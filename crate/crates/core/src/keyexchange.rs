//! Cooperative key exchange at the block level.
//!
//! The designated transmitter splits a pre-secret `B` into one contiguous
//! block per transmitter. Each transmitter sends its block to the receiver,
//! and both ends derive `K = SHA-256(b_1 || ... || b_n)`. A block is
//! intercepted when some eavesdropper is at least as close to its
//! transmitter as the receiver. The adversary learns `K` only if it
//! intercepts every block.
//!
//! Links between transmitters are treated as perfectly secure. No
//! encryption is simulated on them.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::geometry::distance;
use crate::secrecy::Deployment;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Key(pub [u8; 32]);

impl Key {
    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|b| write!(f, "{b:02x}"))
    }
}

/// The pre-secret message `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreSecret(pub Vec<u8>);

/// Ordered blocks whose concatenation is the pre-secret.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSet {
    pub blocks: Vec<Vec<u8>>,
}

impl BlockSet {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn concat(&self) -> Vec<u8> {
        self.blocks.concat()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeOutcome {
    pub blocks: BlockSet,
    pub receiver_key: Key,
    /// Present only when every block was intercepted.
    pub adversary_key: Option<Key>,
    pub intercepted: Vec<bool>,
    pub secure: bool,
}

/// Contiguous split: the first `len % n` blocks get one extra octet.
pub fn split_presecret(b: &[u8], n_blocks: usize) -> Result<BlockSet> {
    if n_blocks == 0 {
        return Err(Error::ZeroBlocks);
    }
    if b.len() < n_blocks {
        return Err(Error::PreSecretTooShort {
            len: b.len(),
            blocks: n_blocks,
        });
    }
    let (base, extra) = (b.len() / n_blocks, b.len() % n_blocks);
    let mut rest = b;
    let blocks = (0..n_blocks)
        .map(|i| {
            let (head, tail) = rest.split_at(base + usize::from(i < extra));
            rest = tail;
            head.to_vec()
        })
        .collect();
    Ok(BlockSet { blocks })
}

pub fn derive_key(blocks: &BlockSet) -> Key {
    let mut h = Sha256::new();
    for b in &blocks.blocks {
        h.update(b);
    }
    Key(h.finalize().into())
}

/// Runs the protocol over a deployment: transmitter `i` carries block `i`.
pub fn simulate_exchange(deployment: &Deployment, b: &PreSecret) -> Result<ExchangeOutcome> {
    let Deployment {
        transmitters,
        eavesdroppers,
        receiver,
    } = deployment;
    if transmitters.is_empty() {
        return Err(Error::NoTransmitters);
    }
    let blocks = split_presecret(&b.0, transmitters.len())?;
    let intercepted: Vec<bool> = transmitters
        .iter()
        .map(|t| {
            let d_tr = distance(*t, *receiver);
            eavesdroppers.iter().any(|e| distance(*t, *e) <= d_tr)
        })
        .collect();
    let receiver_key = derive_key(&blocks);
    let all_intercepted = intercepted.iter().all(|&f| f);
    // the adversary rebuilds B from its copies of the blocks
    let adversary_key = all_intercepted.then(|| derive_key(&blocks));
    Ok(ExchangeOutcome {
        blocks,
        receiver_key,
        adversary_key,
        intercepted,
        secure: !all_intercepted,
    })
}
