//! Hamiltonian bypasses in digraphs under Meyniel-type degree conditions.
//!
//! The crate is organised bottom-up:
//!
//! * [`digraph`] holds the bit-matrix [`Digraph`] and [`VertexSet`] types,
//!   with [`canon`] providing canonical forms for isomorphism tests.
//! * [`connectivity`] computes ordered strong components and k-strong tests.
//! * [`conditions`] evaluates every degree condition, as booleans and margins.
//! * [`families`] generates and recognizes the exceptional digraph families.
//! * [`search`] finds Hamiltonian cycles, bypasses, `D(p,n)` patterns and
//!   implements the constructive insertion operations.
//! * [`certify`] validates witnesses without sharing code with the searcher.
//! * [`verify`] checks theorem claims per digraph and runs enumeration sweeps.
//! * [`io`] reads and writes digraph6 and edge-list text.

pub mod canon;
pub mod certify;
pub mod conditions;
pub mod connectivity;
pub mod digraph;
pub mod error;
pub mod families;
pub mod io;
pub mod search;
pub mod verify;

pub use canon::{canonical_form, canonical_labeling, isomorphism, CanonicalForm, CANON_MAX_ORDER};
pub use digraph::{Degree, Digraph, VertexSet, MAX_ORDER};
pub use error::{Error, Result};
pub use families::{FamilyLabel, FamilySpec, LabelKind};
pub use search::{Witness, WitnessKind};
pub use verify::{ClaimId, SweepMode, SweepReport, Verdict};
