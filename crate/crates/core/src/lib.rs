//! Exact real algebraic geometry for plane curves: subresultants, root
//! counting, closed-form multiple roots and curve topology.

pub mod algnum;
pub mod error;
pub mod linalg;
pub mod multroot;
pub mod poly;
pub mod ring;
pub mod rootcount;
pub mod quadrics;
pub mod subres;
pub mod topology;

pub use error::{Error, Result};
pub use poly::{BiPoly, RatPoly, UniPoly};
pub use ring::{Field, Ordered, OrderedField, Rat, Ring, Sign};
