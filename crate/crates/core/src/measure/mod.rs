//! The measure catalog: a small expression language over probability
//! symbols, its parser and evaluator, and the registry of named measures.
//!
//! Measures are either *computable* (an arithmetic expression over the
//! symbols `pxy pxny pnxy pnxny px py pnx pny n`) or *declared-only*: a name
//! whose closed form needs machinery outside this language (a probabilistic
//! model), shipped with a reference property vector instead of a formula.

mod catalog;
mod eval;
mod expr;
mod parser;

pub use catalog::{Catalog, CatalogError, MeasureDef, MeasureKind};
pub use eval::{CompiledExpr, EvalError};
pub use expr::{BinOp, Func, MeasureExpr, Var};
pub use parser::{parse_measure, ParseError};

use crate::contingency::ContingencyTable;

/// Evaluates a computable measure on a table.
///
/// Domain faults (division by zero, log of a non-positive value, ...) come
/// back as [`EvalError::Undefined`], distinguishable from misuse errors such
/// as evaluating a declared-only entry.
pub fn eval_measure(def: &MeasureDef, table: &ContingencyTable) -> Result<f64, EvalError> {
    match &def.kind {
        MeasureKind::Computable(expr) => CompiledExpr::compile(expr).eval_table(table),
        MeasureKind::DeclaredOnly(_) => Err(EvalError::NotComputable(def.name.clone())),
    }
}
