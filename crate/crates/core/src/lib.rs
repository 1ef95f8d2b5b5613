pub mod char_ring;
pub mod chebyshev;
pub mod error;
pub mod poly;
pub mod pretzel;
pub mod reducedness;
pub mod sl2;
pub mod trace;
pub mod word;

pub use error::{Error, Result};
pub use poly::{Degree, Monomial, TracePolynomial, Var};
pub use trace::{Strategy, TraceEngine};
pub use word::{parse_word, Letter, Word};
