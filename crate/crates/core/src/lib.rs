//! Evaluate association-rule interestingness measures on 2x2 contingency
//! tables, decide a battery of semantic properties for each measure, build a
//! formal context from the resulting binary matrix, construct its concept
//! lattice, cluster the measures, and validate the clusters through the
//! lattice.
//!
//! The crate is organized as a pipeline:
//!
//! * [`contingency`] — contingency tables, transaction data, rule validity.
//! * [`measure`] — the measure expression language, parser, evaluator and
//!   the bundled catalog of measures.
//! * [`properties`] — numerical property checking and the measures x
//!   properties binary matrix.
//! * [`fca`] — formal contexts, NextClosure concept enumeration, Hasse
//!   diagrams, Burmeister I/O and DOT export.
//! * [`cluster`] — Ward-linkage agglomerative clustering, K-means, and
//!   partition comparison.
//! * [`validation`] — per-cluster lattice validation and nearest-cluster
//!   assignment of floating objects.

pub mod bitset;
pub mod cluster;
pub mod contingency;
pub mod fca;
pub mod measure;
pub mod properties;
pub mod validation;

pub use bitset::BitSet;
pub use cluster::{Dendrogram, Partition, PartitionMethod};
pub use contingency::{ContingencyTable, FullTable, RuleQuery, TransactionSet};
pub use fca::{Concept, ConceptLattice, FormalContext};
pub use measure::{Catalog, MeasureDef, MeasureExpr, MeasureKind};
pub use properties::{PropertyMatrix, PropertyVector, SamplingGrid, Shape};
pub use validation::{AssignmentResult, ClusterValidation, ValidationConfig, Verdict};
