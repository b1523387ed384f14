//! The tensor-space realization: words, weights, generator operators and
//! weight idempotents.

mod model;
mod operator;
mod roots;
mod weight;

pub use model::{Generator, Model, DEFAULT_WORD_CAP};
pub use operator::SparseOperator;
pub use roots::{Root, RootData};
pub use weight::{bounded_vectors, compositions, Weight, Word};
