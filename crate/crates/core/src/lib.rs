//! Exact arithmetic for skew power series rings `A[[y; alpha]]` and skew
//! Laurent series rings `A[[y, 1/y; alpha]]` of automorphic type, over
//! finite-dimensional algebras `A` over prime fields, together with
//! desk-scale verification of their ideal theory and Goldie ranks.

pub mod algebra;
pub mod automorphism;
pub mod catalog;
pub mod error;
pub mod field;
pub mod goldie;
pub mod ideal;
pub mod induced;
pub mod laurent;
pub mod limits;
pub mod linalg;
pub mod module;
pub mod primes;
pub mod quotient;
pub mod radical;
pub mod report;
pub mod scenario;
pub mod series;
pub mod spec_doc;
pub mod truncation;

pub use algebra::Algebra;
pub use automorphism::Automorphism;
pub use error::{Error, Result};
pub use field::PrimeField;
pub use ideal::{Ideal, RightIdeal};
pub use limits::Limits;
pub use series::{SkewContext, SkewSeries};
pub use laurent::SkewLaurent;
pub use induced::InducedIdealView;
pub use report::{Claim, Report, Status};
pub use truncation::{build_truncation, TruncationRing};
