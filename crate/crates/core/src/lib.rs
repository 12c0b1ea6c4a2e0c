//! Building blocks for tweet classification experiments: corpus preprocessing,
//! skip-gram word embeddings, a convolutional tweet classifier, linear-SVM and
//! random baselines, and the cross-validation / significance-testing protocol
//! that ties them together.
//!
//! The [`corpus`] module handles tokenization, stemming, vocabularies and
//! coverage analysis. [`embeddings`] trains and serves word vectors.
//! [`cnn`] and [`baselines`] are the classifiers; [`evaluation`] runs the
//! 5-fold protocol and statistical comparisons.

pub mod baselines;
pub mod cnn;
pub mod corpus;
pub mod embeddings;
pub mod error;
pub mod evaluation;

pub(crate) mod util;

pub use error::{Error, Result};
