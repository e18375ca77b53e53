//! 2x2 contingency tables of an association rule X -> Y.
//!
//! A table is parameterized by the total `n` and the three counts `n_x`,
//! `n_y`, `n_xy`; the remaining joint cells are derived, which makes
//! inconsistent inputs unrepresentable. Cells are real-valued: property
//! sampling evaluates measures at points such as the independence cell
//! `n_xy = n_x * n_y / n`, which is rarely integral. Integer tables are the
//! ordinary special case.
//!
//! All values are immutable after construction and every operation is pure.

use std::collections::BTreeSet;
use std::path::Path;

use thiserror::Error;

/// Relative slack used when checking the feasibility inequalities, scaled by
/// the table total so that real-valued cells produced by arithmetic on the
/// marginals do not get rejected for rounding noise.
const FEASIBILITY_SLACK: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum TableError {
    #[error("total n must be positive, got {0}")]
    NonPositiveTotal(f64),
    #[error("cell {name} = {value} is negative")]
    NegativeCell { name: &'static str, value: f64 },
    #[error("n_x = {n_x} exceeds n = {n}")]
    AntecedentExceedsTotal { n_x: f64, n: f64 },
    #[error("n_y = {n_y} exceeds n = {n}")]
    ConsequentExceedsTotal { n_y: f64, n: f64 },
    #[error("n_xy = {n_xy} exceeds min(n_x, n_y) = {bound}")]
    JointExceedsMarginals { n_xy: f64, bound: f64 },
    #[error("n_xy = {n_xy} is below max(0, n_x + n_y - n) = {bound}")]
    JointBelowFeasible { n_xy: f64, bound: f64 },
    #[error("confidence undefined: n_x = 0")]
    ConfidenceUndefined,
}

#[derive(Debug, Error, PartialEq)]
pub enum DataError {
    #[error("antecedent and consequent overlap")]
    OverlappingRule,
    #[error("rule side is empty")]
    EmptyRuleSide,
    #[error("threshold {name} = {value} outside [0, 1]")]
    BadThreshold { name: &'static str, value: f64 },
    #[error("unknown attribute name: {0}")]
    UnknownAttribute(String),
    #[error("empty dataset")]
    EmptyDataset,
    #[error("record {record} uses attribute {attribute} missing from the universe")]
    RecordOutsideUniverse { record: usize, attribute: String },
}

/// The four-parameter form of a rule's 2x2 table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContingencyTable {
    n: f64,
    n_x: f64,
    n_y: f64,
    n_xy: f64,
}

impl ContingencyTable {
    /// Builds a table from `(n, n_x, n_y, n_xy)`, rejecting any combination
    /// that violates the 2x2 feasibility inequalities.
    pub fn new(n: f64, n_x: f64, n_y: f64, n_xy: f64) -> Result<Self, TableError> {
        if !(n > 0.0) {
            return Err(TableError::NonPositiveTotal(n));
        }
        let slack = FEASIBILITY_SLACK * n;
        for (name, value) in [("n_x", n_x), ("n_y", n_y), ("n_xy", n_xy)] {
            if value < -slack {
                return Err(TableError::NegativeCell { name, value });
            }
        }
        if n_x > n + slack {
            return Err(TableError::AntecedentExceedsTotal { n_x, n });
        }
        if n_y > n + slack {
            return Err(TableError::ConsequentExceedsTotal { n_y, n });
        }
        let upper = n_x.min(n_y);
        if n_xy > upper + slack {
            return Err(TableError::JointExceedsMarginals { n_xy, bound: upper });
        }
        let lower = (n_x + n_y - n).max(0.0);
        if n_xy < lower - slack {
            return Err(TableError::JointBelowFeasible { n_xy, bound: lower });
        }
        Ok(ContingencyTable { n, n_x, n_y, n_xy })
    }

    /// Builds a table directly from the four joint cells.
    pub fn from_cells(n_xy: f64, n_xny: f64, n_nxy: f64, n_nxny: f64) -> Result<Self, TableError> {
        let n = n_xy + n_xny + n_nxy + n_nxny;
        ContingencyTable::new(n, n_xy + n_xny, n_xy + n_nxy, n_xy)
    }

    pub fn n(&self) -> f64 {
        self.n
    }
    pub fn n_x(&self) -> f64 {
        self.n_x
    }
    pub fn n_y(&self) -> f64 {
        self.n_y
    }
    pub fn n_xy(&self) -> f64 {
        self.n_xy
    }

    /// All four joint cells plus marginals and probabilities.
    pub fn derive_cells(&self) -> FullTable {
        let clamp = |v: f64| if v < 0.0 { 0.0 } else { v };
        let n = self.n;
        let n_xy = self.n_xy;
        let n_xny = clamp(self.n_x - self.n_xy);
        let n_nxy = clamp(self.n_y - self.n_xy);
        let n_nxny = clamp(n - self.n_x - self.n_y + self.n_xy);
        FullTable {
            n,
            n_xy,
            n_xny,
            n_nxy,
            n_nxny,
            p_x: self.n_x / n,
            p_y: self.n_y / n,
            p_xy: n_xy / n,
            p_xny: n_xny / n,
            p_nxy: n_nxy / n,
            p_nxny: n_nxny / n,
        }
    }

    /// Support and confidence of the rule, and whether both clear the query
    /// thresholds. Confidence is an error on `n_x = 0` rather than 0 or NaN.
    pub fn validity(&self, query: &RuleQuery) -> Result<RuleValidity, TableError> {
        if self.n_x == 0.0 {
            return Err(TableError::ConfidenceUndefined);
        }
        let support = self.n_xy / self.n;
        let confidence = self.n_xy / self.n_x;
        Ok(RuleValidity {
            support,
            confidence,
            valid: support >= query.minsupp && confidence >= query.minconf,
            exact: confidence == 1.0,
        })
    }

    // Rule transforms used by the property checkers. Each returns the table
    // of the transformed rule over the same records.

    /// Y -> X.
    pub fn swapped(&self) -> Result<Self, TableError> {
        ContingencyTable::new(self.n, self.n_y, self.n_x, self.n_xy)
    }

    /// X -> not-Y.
    pub fn negate_consequent(&self) -> Result<Self, TableError> {
        ContingencyTable::new(self.n, self.n_x, self.n - self.n_y, self.n_x - self.n_xy)
    }

    /// not-X -> Y.
    pub fn negate_antecedent(&self) -> Result<Self, TableError> {
        ContingencyTable::new(self.n, self.n - self.n_x, self.n_y, self.n_y - self.n_xy)
    }

    /// not-X -> not-Y.
    pub fn negate_both(&self) -> Result<Self, TableError> {
        ContingencyTable::new(
            self.n,
            self.n - self.n_x,
            self.n - self.n_y,
            self.n - self.n_x - self.n_y + self.n_xy,
        )
    }

    /// not-Y -> not-X (the contrapositive rule).
    pub fn contrapose(&self) -> Result<Self, TableError> {
        ContingencyTable::new(
            self.n,
            self.n - self.n_y,
            self.n - self.n_x,
            self.n - self.n_x - self.n_y + self.n_xy,
        )
    }
}

/// Fully derived view of a table: joint cells, marginals, probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FullTable {
    pub n: f64,
    pub n_xy: f64,
    pub n_xny: f64,
    pub n_nxy: f64,
    pub n_nxny: f64,
    pub p_x: f64,
    pub p_y: f64,
    pub p_xy: f64,
    pub p_xny: f64,
    pub p_nxy: f64,
    pub p_nxny: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuleValidity {
    pub support: f64,
    pub confidence: f64,
    pub valid: bool,
    /// Confidence exactly 1: the rule holds without counter-examples.
    pub exact: bool,
}

/// A rule query: antecedent and consequent attribute sets plus thresholds.
#[derive(Debug, Clone)]
pub struct RuleQuery {
    pub antecedent: BTreeSet<String>,
    pub consequent: BTreeSet<String>,
    pub minsupp: f64,
    pub minconf: f64,
}

impl RuleQuery {
    pub fn new<I, J, S>(antecedent: I, consequent: J, minsupp: f64, minconf: f64) -> Result<Self, DataError>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let antecedent: BTreeSet<String> = antecedent.into_iter().map(Into::into).collect();
        let consequent: BTreeSet<String> = consequent.into_iter().map(Into::into).collect();
        if antecedent.is_empty() || consequent.is_empty() {
            return Err(DataError::EmptyRuleSide);
        }
        if antecedent.intersection(&consequent).next().is_some() {
            return Err(DataError::OverlappingRule);
        }
        for (name, value) in [("minsupp", minsupp), ("minconf", minconf)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(DataError::BadThreshold { name, value });
            }
        }
        Ok(RuleQuery {
            antecedent,
            consequent,
            minsupp,
            minconf,
        })
    }
}

/// A list of records, each a set of attribute names drawn from a universe.
#[derive(Debug, Clone, Default)]
pub struct TransactionSet {
    pub universe: Vec<String>,
    pub records: Vec<BTreeSet<String>>,
}

impl TransactionSet {
    pub fn new(universe: Vec<String>, records: Vec<BTreeSet<String>>) -> Result<Self, DataError> {
        let known: BTreeSet<&str> = universe.iter().map(|s| s.as_str()).collect();
        for (i, record) in records.iter().enumerate() {
            for attr in record {
                if !known.contains(attr.as_str()) {
                    return Err(DataError::RecordOutsideUniverse {
                        record: i,
                        attribute: attr.clone(),
                    });
                }
            }
        }
        Ok(TransactionSet { universe, records })
    }

    /// Parses the line-oriented format: one record per line, attribute names
    /// separated by single spaces, lines starting with `#` ignored. The
    /// universe is the set of attribute names seen, in first-seen order.
    pub fn parse(text: &str) -> Self {
        let mut universe: Vec<String> = Vec::new();
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut records = Vec::new();
        for line in text.lines() {
            let line = line.trim_end_matches('\r');
            if line.starts_with('#') {
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let mut record = BTreeSet::new();
            for attr in line.split(' ').filter(|a| !a.is_empty()) {
                if seen.insert(attr.to_string()) {
                    universe.push(attr.to_string());
                }
                record.insert(attr.to_string());
            }
            records.push(record);
        }
        TransactionSet { universe, records }
    }

    pub fn load(path: &Path) -> Result<Self, std::io::Error> {
        Ok(TransactionSet::parse(&std::fs::read_to_string(path)?))
    }

    /// Counts the rule's contingency table over the records.
    pub fn count_rule(&self, query: &RuleQuery) -> Result<ContingencyTable, DataError> {
        let known: BTreeSet<&str> = self.universe.iter().map(|s| s.as_str()).collect();
        for attr in query.antecedent.iter().chain(&query.consequent) {
            if !known.contains(attr.as_str()) {
                return Err(DataError::UnknownAttribute(attr.clone()));
            }
        }
        if self.records.is_empty() {
            return Err(DataError::EmptyDataset);
        }
        let has_all = |record: &BTreeSet<String>, attrs: &BTreeSet<String>| {
            attrs.iter().all(|a| record.contains(a))
        };
        let mut n_x = 0.0;
        let mut n_y = 0.0;
        let mut n_xy = 0.0;
        for record in &self.records {
            let x = has_all(record, &query.antecedent);
            let y = has_all(record, &query.consequent);
            if x {
                n_x += 1.0;
            }
            if y {
                n_y += 1.0;
            }
            if x && y {
                n_xy += 1.0;
            }
        }
        Ok(ContingencyTable::new(self.records.len() as f64, n_x, n_y, n_xy)
            .expect("counted cells are always feasible"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: f64, n_x: f64, n_y: f64, n_xy: f64) -> ContingencyTable {
        ContingencyTable::new(n, n_x, n_y, n_xy).unwrap()
    }

    #[test]
    fn derive_cells_reference_table() {
        let cells = table(100.0, 40.0, 50.0, 20.0).derive_cells();
        assert_eq!(cells.n_xny, 20.0);
        assert_eq!(cells.n_nxy, 30.0);
        assert_eq!(cells.n_nxny, 30.0);
        assert_eq!(cells.p_x, 0.4);
        assert_eq!(cells.p_y, 0.5);
        assert_eq!(cells.p_xy, 0.2);
    }

    #[test]
    fn derive_cells_implication_case() {
        // X subset of Y forces zero counter-examples.
        let cells = table(100.0, 40.0, 50.0, 40.0).derive_cells();
        assert_eq!(cells.n_xny, 0.0);
    }

    #[test]
    fn infeasible_joint_cell_rejected() {
        let err = ContingencyTable::new(10.0, 4.0, 5.0, 6.0).unwrap_err();
        assert!(matches!(err, TableError::JointExceedsMarginals { .. }));
        let err = ContingencyTable::new(10.0, 8.0, 8.0, 1.0).unwrap_err();
        assert!(matches!(err, TableError::JointBelowFeasible { .. }));
    }

    #[test]
    fn all_integer_tables_are_additive() {
        // Exhaustively check that derived cells are non-negative and sum to n
        // for every feasible integer table with n <= 30.
        for n in 1..=30u32 {
            for n_x in 0..=n {
                for n_y in 0..=n {
                    let lo = (n_x + n_y).saturating_sub(n);
                    for n_xy in lo..=n_x.min(n_y) {
                        let t = table(n as f64, n_x as f64, n_y as f64, n_xy as f64);
                        let c = t.derive_cells();
                        assert!(c.n_xny >= 0.0 && c.n_nxy >= 0.0 && c.n_nxny >= 0.0);
                        let sum = c.n_xy + c.n_xny + c.n_nxy + c.n_nxny;
                        assert!((sum - n as f64).abs() < 1e-9, "cells sum to {sum}, n = {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn scaling_leaves_probabilities_unchanged() {
        let base = table(100.0, 40.0, 50.0, 20.0).derive_cells();
        for k in [0.5, 2.0, 7.25] {
            let scaled = table(100.0 * k, 40.0 * k, 50.0 * k, 20.0 * k).derive_cells();
            assert!((scaled.p_x - base.p_x).abs() < 1e-12);
            assert!((scaled.p_y - base.p_y).abs() < 1e-12);
            assert!((scaled.p_xy - base.p_xy).abs() < 1e-12);
        }
    }

    #[test]
    fn count_rule_from_records() {
        let data = TransactionSet::parse("a b\na\nb\na b\n");
        let q = RuleQuery::new(["a"], ["b"], 0.0, 0.0).unwrap();
        let t = data.count_rule(&q).unwrap();
        assert_eq!((t.n(), t.n_x(), t.n_y(), t.n_xy()), (4.0, 3.0, 3.0, 2.0));
    }

    #[test]
    fn overlapping_rule_rejected() {
        let err = RuleQuery::new(["a"], ["a"], 0.0, 0.0).unwrap_err();
        assert_eq!(err, DataError::OverlappingRule);
    }

    #[test]
    fn exact_rule_when_all_records_match() {
        let data = TransactionSet::parse("a b\na b c\na b\n");
        let q = RuleQuery::new(["a"], ["b"], 0.1, 0.4).unwrap();
        let t = data.count_rule(&q).unwrap();
        assert_eq!(t.n_xy(), t.n());
        let v = t.validity(&q).unwrap();
        assert!(v.exact && v.valid);
        assert_eq!(v.confidence, 1.0);
    }

    #[test]
    fn validity_reference_values() {
        let q = RuleQuery::new(["x"], ["y"], 0.1, 0.4).unwrap();
        let v = table(100.0, 40.0, 50.0, 20.0).validity(&q).unwrap();
        assert_eq!(v.support, 0.2);
        assert_eq!(v.confidence, 0.5);
        assert!(v.valid && !v.exact);

        let strict = RuleQuery::new(["x"], ["y"], 0.25, 0.4).unwrap();
        let v = table(100.0, 40.0, 50.0, 20.0).validity(&strict).unwrap();
        assert!(!v.valid);
    }

    #[test]
    fn confidence_undefined_on_empty_antecedent() {
        let q = RuleQuery::new(["x"], ["y"], 0.0, 0.0).unwrap();
        let err = table(10.0, 0.0, 5.0, 0.0).validity(&q).unwrap_err();
        assert_eq!(err, TableError::ConfidenceUndefined);
    }

    #[test]
    fn unknown_attribute_and_empty_dataset() {
        let data = TransactionSet::parse("a b\n");
        let q = RuleQuery::new(["a"], ["z"], 0.0, 0.0).unwrap();
        assert!(matches!(data.count_rule(&q), Err(DataError::UnknownAttribute(_))));

        let empty = TransactionSet::parse("# only a comment\n");
        let q = RuleQuery::new(["a"], ["b"], 0.0, 0.0).unwrap();
        // Attribute check fires first on a truly empty universe.
        assert!(data.records.len() == 1 && empty.count_rule(&q).is_err());
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let data = TransactionSet::parse("# header\na b\n\nb c\n");
        assert_eq!(data.records.len(), 2);
        assert_eq!(data.universe, vec!["a", "b", "c"]);
    }

    #[test]
    fn transforms_preserve_feasibility() {
        let t = table(100.0, 40.0, 50.0, 25.0);
        for tr in [
            t.swapped().unwrap(),
            t.negate_consequent().unwrap(),
            t.negate_antecedent().unwrap(),
            t.negate_both().unwrap(),
            t.contrapose().unwrap(),
        ] {
            let c = tr.derive_cells();
            assert!((c.n_xy + c.n_xny + c.n_nxy + c.n_nxny - 100.0).abs() < 1e-9);
        }
        // Double negation keeps the same counter-example cell mirrored.
        assert_eq!(t.negate_both().unwrap().n_xy(), 35.0);
    }
}
