//! The guide in `book/`, compiled so that every snippet runs as a doc-test.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/eigenforms.md")]
pub mod eigenforms {}

#[doc = include_str!("../../../book/src/isomorphism.md")]
pub mod isomorphism {}

#[doc = include_str!("../../../book/src/ore.md")]
pub mod ore {}

#[doc = include_str!("../../../book/src/weyl.md")]
pub mod weyl {}

#[doc = include_str!("../../../book/src/spectrum.md")]
pub mod spectrum {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
