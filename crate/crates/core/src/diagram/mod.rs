//! Planar diagrams as words of elementary slices.

mod link;
mod oriented;
mod strands;
mod word;

pub use link::{braid_closure, braid_slices, LinkDiagram};
pub use oriented::{
    count_pm, format_orientation, orientation_string, OrientationString, OrientedTangleWord, Sign,
};
pub use strands::{Next, Step, Tracer};
pub use word::{GenSlice, SliceKind, TangleWord};
