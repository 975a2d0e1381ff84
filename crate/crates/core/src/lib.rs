//! Classification of monomial sequences in `K[x_1, ..., x_m]` as
//! d-sequences, proper sequences and (strong) s-sequences, each decided both
//! by a closed-form divisibility criterion and by a definition-level oracle,
//! together with invariants of the symmetric algebra of the generated ideal.

pub mod audit;
mod bigint_serde;
pub mod corpus;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod report;
pub mod s_sequence;
pub mod sequence;
pub mod symmetric;

pub use error::{Error, MonomialError, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, VariableSet};
pub use poly::{GroebnerLimits, MonomialOrder};
pub use sequence::{MonomialSequence, Verdict};
