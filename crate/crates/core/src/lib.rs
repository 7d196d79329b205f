//! Numerical toolkit for infinitesimal generators of one-parameter
//! semigroups of holomorphic self-maps of the unit disk, and for the
//! starlike classes that describe them.

// guards like `!(x > 0.0)` also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod class;
pub mod error;
pub mod functions;
pub mod membership;
pub mod numeric;
pub mod radius;
pub mod semiflow;
pub mod series;

pub use class::ClassSpec;
pub use error::{Error, Result};
pub use functions::{HerglotzSpec, NamedFunction};
pub use membership::{GridSpec, MembershipReport};
pub use radius::{Branch, PhiTarget, RadiusQuery, RadiusResult, TuanAnhBound};
pub use semiflow::{DecayCertificate, Trajectory};
pub use series::{NormalizedSeries, PowerSeries};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/series.md")]
mod book_series {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/functions.md")]
mod book_functions {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/membership.md")]
mod book_membership {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/radius.md")]
mod book_radius {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/semiflow.md")]
mod book_semiflow {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
