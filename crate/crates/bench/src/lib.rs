//! Fixtures shared by the benchmarks.

use symcrystal::canonical::Block;
use symcrystal::mseg::{Content, SymContent};
use symcrystal::Window;

/// `{±1, ±3}`.
pub fn window() -> Window {
    Window::symmetric(3).expect("valid window")
}

/// A type-A block of degree 4.
pub fn type_a_block() -> Block {
    Block::TypeA(Content::from_indices([-1, 1, 1, 3]))
}

/// A θ block of degree 3.
pub fn theta_block() -> Block {
    Block::Theta(SymContent::from_abs([1, 1, 3]))
}

pub fn content_of(block: &Block) -> Option<&Content> {
    match block {
        Block::TypeA(c) => Some(c),
        Block::Theta(_) => None,
    }
}

pub fn sym_of(block: &Block) -> Option<&SymContent> {
    match block {
        Block::Theta(s) => Some(s),
        Block::TypeA(_) => None,
    }
}
