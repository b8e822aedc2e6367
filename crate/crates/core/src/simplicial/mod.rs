//! Pure simplicial complexes, orientations, sphere checks and canonical forms.

mod canonical;
mod complex;
mod orientation;
mod sphere;

pub use canonical::{canonical_form, canonical_relabeling};
pub use complex::{Complex, ComplexError, PseudomanifoldReport};
pub use orientation::{OrientationError, OrientedComplex};
pub use sphere::{is_sphere, SphereStatus, SphereVerdict};

/// Opaque vertex identifier.
pub type Vertex = u32;

/// Sign (+1 or -1) of the permutation that sorts `seq`. Entries must be
/// distinct.
pub fn parity<T: Ord>(seq: &[T]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
