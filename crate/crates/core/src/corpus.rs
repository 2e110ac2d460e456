//! Exhaustive enumeration of small semigroups and counterexample search
//! over them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::{Error, FiniteSemigroup, Result};

/// Largest order the enumerator accepts.
pub const MAX_ORDER: usize = 4;

/// Orders above this need an explicit opt-in.
pub const UNGATED_ORDER: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dedup {
    /// Every associative table.
    Labeled,
    /// One canonical form per isomorphism class.
    UpToIsomorphism,
}

/// All semigroups of orders `1..=max_order`.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub max_order: usize,
    pub dedup: Dedup,
    pub members: Vec<FiniteSemigroup>,
}

impl Corpus {
    pub fn new(max_order: usize, dedup: Dedup, allow_order_four: bool) -> Result<Self> {
        let mut members = Vec::new();
        for n in 1..=max_order {
            members.extend(enumerate_semigroups(n, dedup, allow_order_four)?);
        }
        Ok(Self {
            max_order,
            dedup,
            members,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn check_order(n: usize, allow_order_four: bool) -> Result<()> {
    if n > MAX_ORDER || (n > UNGATED_ORDER && !allow_order_four) {
        return Err(Error::OrderTooLarge {
            order: n,
            max: if allow_order_four { MAX_ORDER } else { UNGATED_ORDER },
        });
    }
    Ok(())
}

/// All semigroups on exactly `n` elements. Labeled tables come in
/// row-major lexicographic order; deduplicated ones are canonical forms in
/// sorted order.
pub fn enumerate_semigroups(n: usize, dedup: Dedup, allow_order_four: bool) -> Result<Vec<FiniteSemigroup>> {
    check_order(n, allow_order_four)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let labeled = labeled_tables(n);
    let semigroups: Vec<FiniteSemigroup> = labeled
        .into_iter()
        .map(|t| FiniteSemigroup::new(n, t).expect("enumerated tables are associative"))
        .collect();
    Ok(match dedup {
        Dedup::Labeled => semigroups,
        Dedup::UpToIsomorphism => {
            let forms: BTreeSet<FiniteSemigroup> = semigroups.par_iter().map(FiniteSemigroup::canonical_form).collect();
            forms.into_iter().collect()
        }
    })
}

const UNSET: usize = usize::MAX;

/// Backtracking over cells in row-major order. After each assignment every
/// triple whose four products are already defined is checked.
fn labeled_tables(n: usize) -> Vec<Vec<usize>> {
    let mut table = vec![UNSET; n * n];
    let mut out = Vec::new();
    fill(n, 0, &mut table, &mut out);
    out
}

fn fill(n: usize, cell: usize, table: &mut [usize], out: &mut Vec<Vec<usize>>) {
    if cell == n * n {
        out.push(table.to_vec());
        return;
    }
    for v in 0..n {
        table[cell] = v;
        if consistent(n, table) {
            fill(n, cell + 1, table, out);
        }
    }
    table[cell] = UNSET;
}

fn consistent(n: usize, t: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            if ab == UNSET {
                continue;
            }
            for c in 0..n {
                let bc = t[b * n + c];
                if bc == UNSET {
                    continue;
                }
                let (l, r) = (t[ab * n + c], t[a * n + bc]);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// Structural predicates for counterexample search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    FactorizableNotFirm,
    WluNotLu,
    LuNotCwlu,
    FirmNotFactorizable,
    FirmNotWlu,
    CwluNotLu,
    FactorizableNotWlu,
    NotFactorizable,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::FactorizableNotFirm,
        Predicate::WluNotLu,
        Predicate::LuNotCwlu,
        Predicate::FirmNotFactorizable,
        Predicate::FirmNotWlu,
        Predicate::CwluNotLu,
        Predicate::FactorizableNotWlu,
        Predicate::NotFactorizable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::FactorizableNotFirm => "factorizable-not-firm",
            Predicate::WluNotLu => "wlu-not-lu",
            Predicate::LuNotCwlu => "lu-not-cwlu",
            Predicate::FirmNotFactorizable => "firm-not-factorizable",
            Predicate::FirmNotWlu => "firm-not-wlu",
            Predicate::CwluNotLu => "cwlu-not-lu",
            Predicate::FactorizableNotWlu => "factorizable-not-wlu",
            Predicate::NotFactorizable => "not-factorizable",
        }
    }

    pub fn holds(self, s: &FiniteSemigroup) -> bool {
        let c = s.classify();
        match self {
            Predicate::FactorizableNotFirm => c.factorizable && !c.firm,
            Predicate::WluNotLu => c.weak_local_units && !c.local_units,
            Predicate::LuNotCwlu => c.local_units && !c.common_weak_local_units,
            Predicate::FirmNotFactorizable => c.firm && !c.factorizable,
            Predicate::FirmNotWlu => c.firm && !c.weak_local_units,
            Predicate::CwluNotLu => c.common_weak_local_units && !c.local_units,
            Predicate::FactorizableNotWlu => c.factorizable && !c.weak_local_units,
            Predicate::NotFactorizable => !c.factorizable,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Predicate::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<_> = Predicate::ALL.iter().map(|p| p.name()).collect();
            format!("unknown predicate `{s}`; expected one of {}", names.join(", "))
        })
    }
}

/// The least semigroup satisfying `predicate`, ordered by size and then
/// lexicographically by row-major table, among orders `1..=max_order`.
pub fn find_counterexample(
    predicate: Predicate,
    max_order: usize,
    allow_order_four: bool,
) -> Result<Option<FiniteSemigroup>> {
    check_order(max_order, allow_order_four)?;
    for n in 1..=max_order {
        let members = enumerate_semigroups(n, Dedup::Labeled, allow_order_four)?;
        if let Some(s) = members.into_par_iter().find_first(|s| predicate.holds(s)) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
