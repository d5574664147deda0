//! Validation reports and structural errors shared by every checker.
//!
//! Checkers separate two kinds of failure. A [`StructureError`] means the
//! tables cannot even be read as the claimed object (wrong sizes, dangling
//! ids, mistyped components); it is returned as `Err`. A law violation means
//! the tables are well formed but some equation fails; it is recorded in a
//! [`ValidationReport`] together with the tuple that witnesses it.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Tag naming the law an instance was checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    // categories
    Associativity,
    LeftIdentity,
    RightIdentity,
    // functors and transformations
    FunctorTyping,
    FunctorIdentity,
    FunctorComposition,
    NatTyping,
    Naturality,
    // monoidal structure
    AssocNatural,
    LunitNatural,
    RunitNatural,
    StructureInvertible,
    Pentagon,
    Triangle,
    Coherence,
    // 2-groups
    MorphismInvertible,
    WeakInverse,
    UnitInvertible,
    CounitInvertible,
    ZigZag1,
    ZigZag2,
    InvIdentity,
    InvComposition,
    // homomorphisms
    F2Natural,
    F2Invertible,
    F0Invertible,
    FunctorAssoc,
    LeftUnitSquare,
    RightUnitSquare,
    MonNatTensor,
    MonNatUnit,
}

impl Law {
    pub fn tag(self) -> &'static str {
        match self {
            Law::Associativity => "ASSOCIATIVITY",
            Law::LeftIdentity => "LEFT_IDENTITY",
            Law::RightIdentity => "RIGHT_IDENTITY",
            Law::FunctorTyping => "FUNCTOR_TYPING",
            Law::FunctorIdentity => "FUNCTOR_IDENTITY",
            Law::FunctorComposition => "FUNCTOR_COMPOSITION",
            Law::NatTyping => "NAT_TYPING",
            Law::Naturality => "NATURALITY",
            Law::AssocNatural => "ASSOC_NATURAL",
            Law::LunitNatural => "LUNIT_NATURAL",
            Law::RunitNatural => "RUNIT_NATURAL",
            Law::StructureInvertible => "STRUCTURE_INVERTIBLE",
            Law::Pentagon => "PENTAGON",
            Law::Triangle => "TRIANGLE",
            Law::Coherence => "COHERENCE",
            Law::MorphismInvertible => "MORPHISM_INVERTIBLE",
            Law::WeakInverse => "WEAK_INVERSE",
            Law::UnitInvertible => "UNIT_INVERTIBLE",
            Law::CounitInvertible => "COUNIT_INVERTIBLE",
            Law::ZigZag1 => "ZIGZAG1",
            Law::ZigZag2 => "ZIGZAG2",
            Law::InvIdentity => "INV_IDENTITY",
            Law::InvComposition => "INV_COMPOSITION",
            Law::F2Natural => "F2_NATURAL",
            Law::F2Invertible => "F2_INVERTIBLE",
            Law::F0Invertible => "F0_INVERTIBLE",
            Law::FunctorAssoc => "FUNCTOR_ASSOC",
            Law::LeftUnitSquare => "LEFT_UNIT_SQUARE",
            Law::RightUnitSquare => "RIGHT_UNIT_SQUARE",
            Law::MonNatTensor => "MONNAT_TENSOR",
            Law::MonNatUnit => "MONNAT_UNIT",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One failing law instance. The witness lists the object or morphism
/// indices the law was instantiated at, in the order the law names them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.law)?;
        for w in &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Result of a law check: every violation found plus the number of
/// instances examined per law.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub checked: BTreeMap<Law, usize>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records one checked instance of `law`, and a violation if `holds` is false.
    pub fn check(&mut self, law: Law, holds: bool, witness: impl FnOnce() -> Vec<usize>) {
        *self.checked.entry(law).or_insert(0) += 1;
        if !holds {
            self.violations.push(Violation {
                law,
                witness: witness(),
            });
        }
    }

    pub fn fail(&mut self, law: Law, witness: Vec<usize>) {
        self.check(law, false, || witness);
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
        for (law, n) in other.checked {
            *self.checked.entry(law).or_insert(0) += n;
        }
    }

    pub fn checked_count(&self, law: Law) -> usize {
        self.checked.get(&law).copied().unwrap_or(0)
    }

    pub fn violations_of(&self, law: Law) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.law == law)
    }

    pub fn has_violation(&self, law: Law) -> bool {
        self.violations_of(law).next().is_some()
    }

    /// Line-stable rendering: one `FAIL` line per violation, then one
    /// `CHECKED` line per law.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            out.push_str(&format!("FAIL {v}\n"));
        }
        for (law, n) in &self.checked {
            out.push_str(&format!("CHECKED {law} {n}\n"));
        }
        out.push_str(if self.passed() { "RESULT PASS\n" } else { "RESULT FAIL\n" });
        out
    }
}

/// Malformed input tables, as opposed to law violations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("table `{table}` has {found} entries, expected {expected}")]
    TableSize {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("table `{table}` entry {index} refers to object {value}, but there are only {count} objects")]
    DanglingObject {
        table: &'static str,
        index: usize,
        value: usize,
        count: usize,
    },
    #[error("table `{table}` entry {index} refers to morphism {value}, but there are only {count} morphisms")]
    DanglingMorphism {
        table: &'static str,
        index: usize,
        value: usize,
        count: usize,
    },
    #[error("table `{table}` entry {index} is mistyped: {detail}")]
    Mistyped {
        table: &'static str,
        index: usize,
        detail: String,
    },
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Precondition(String),
}
