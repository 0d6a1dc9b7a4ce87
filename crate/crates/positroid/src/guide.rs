//! The book, compiled.
//!
//! Each module below carries one chapter of the `book/` directory as its
//! documentation, so `cargo test --doc` runs every code block the book
//! shows. If a chapter drifts away from the library, a doc test breaks.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/cyclic-order.md")]
pub mod cyclic_order {}

#[doc = include_str!("../../../book/src/necklaces.md")]
pub mod necklaces {}

#[doc = include_str!("../../../book/src/ranks.md")]
pub mod ranks {}

#[doc = include_str!("../../../book/src/flats.md")]
pub mod flats_and_covers {}

#[doc = include_str!("../../../book/src/polytopes.md")]
pub mod polytopes {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod command_line {}
