//! Factorized-quantization image tokenizer (FQGAN) and its factorized
//! autoregressive generator (FAR).
//!
//! The tokenizer splits a single large VQ codebook into `k` independent
//! sub-codebooks fed by per-branch feature adapters on top of a shared
//! convolutional encoder. Selected codes are concatenated channel-wise and
//! decoded back to pixels. Training combines the usual VQGAN objectives
//! (pixel reconstruction, codebook/commitment, perceptual, adversarial)
//! with a cross-branch disentanglement penalty and a teacher-feature
//! prediction loss that turns one sub-codebook into a semantic codebook.
//!
//! The generator is a class-conditional causal transformer over patch
//! positions whose head predicts the `k` sub-tokens of each patch, either
//! in parallel (`k_linear` / `k_mlp`) or sequentially with a small causal
//! head (`factorized_ar`), sampled with classifier-free guidance.

pub mod config;
pub mod data_io;
pub mod error;
pub mod eval;
pub mod far;
pub mod losses;
pub mod nn;
pub mod quantizer;
pub mod teacher;
pub mod tokenizer;
pub mod training;

pub use config::{FarConfig, HeadVariant, TokenizerConfig, TrainConfig};
pub use error::{Error, Result};
pub use quantizer::{FactorizedTokenGrid, QuantizedMap, SubCodebook};
