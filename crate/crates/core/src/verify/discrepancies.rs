//! Pre-registered disagreements between computed values and published ones.
//!
//! A verification row that disagrees is reported as `known-discrepancy`
//! only if one of these entries covers its (family, quantity, p). Entries
//! never turn a disagreement into a match.

use super::Quantity;
use crate::closed_form::Family;
use crate::index::IndexKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownDiscrepancy {
    pub id: &'static str,
    pub family: Family,
    pub quantity: Quantity,
    pub p_min: u32,
    /// Inclusive; `None` means unbounded.
    pub p_max: Option<u32>,
    /// Published table involved, if the entry is about a table column.
    pub source: Option<super::Source>,
    pub description: &'static str,
}

impl KnownDiscrepancy {
    pub fn covers(&self, family: Family, quantity: Quantity, p: u32) -> bool {
        self.family == family
            && self.quantity == quantity
            && p >= self.p_min
            && self.p_max.map_or(true, |max| p <= max)
    }
}

const LYCO: Quantity = Quantity::Index(IndexKind::Lyco);
const LSO: Quantity = Quantity::Index(IndexKind::Lso);

const COINDEX_VARIANT: &str = "coindex definition multiplies LF by (n-1); the theorem \
    line and its table column multiply by (p-1)";

const ZIGZAG_PARTITION: &str = "published zigzag partition puts p edges in class (4,5) and \
    3(p-1) in (5,5); the chain has 2 and 4p-5, and no benzenoid with 2p hexagons \
    realizes the published classes for p >= 3; every closed form and table cell derived \
    from it is off for p >= 3";

fn zigzag_partition(quantity: Quantity) -> KnownDiscrepancy {
    KnownDiscrepancy {
        id: "zigzag-partition",
        family: Family::Zigzag,
        quantity,
        p_min: 3,
        p_max: None,
        source: Some(super::Source::Table1),
        description: ZIGZAG_PARTITION,
    }
}

/// The registry, in a fixed order.
pub fn known_discrepancies() -> Vec<KnownDiscrepancy> {
    use super::Source::*;
    let mut out = vec![
        KnownDiscrepancy {
            id: "lyco-definition",
            family: Family::Zigzag,
            quantity: LYCO,
            p_min: 2,
            p_max: None,
            source: Some(Table4),
            description: COINDEX_VARIANT,
        },
        KnownDiscrepancy {
            id: "lyco-definition",
            family: Family::Rhombic,
            quantity: LYCO,
            p_min: 2,
            p_max: None,
            source: None,
            description: COINDEX_VARIANT,
        },
        KnownDiscrepancy {
            id: "rhombic-lyco-table",
            family: Family::Rhombic,
            quantity: LYCO,
            p_min: 2,
            p_max: Some(10),
            source: Some(Table6),
            description: "published coindex column matches neither the (n-1) definition \
                nor the printed closed form",
        },
        KnownDiscrepancy {
            id: "lso-rounding",
            family: Family::Zigzag,
            quantity: LSO,
            p_min: 2,
            p_max: Some(10),
            source: Some(Table4),
            description: "Sombor column printed to two decimals with last-digit slips; \
                compared within 0.05",
        },
        KnownDiscrepancy {
            id: "lso-rounding",
            family: Family::Rhombic,
            quantity: LSO,
            p_min: 2,
            p_max: Some(10),
            source: Some(Table6),
            description: "Sombor column printed to two decimals with last-digit slips; \
                compared within 0.05",
        },
        KnownDiscrepancy {
            id: "zigzag-hyper-zagreb-constant",
            family: Family::Zigzag,
            quantity: Quantity::Index(IndexKind::Hlm1),
            p_min: 2,
            p_max: None,
            source: Some(Table3),
            description: "printed HLM1 constant is 50 below the value of its own partition \
                (4*25 summed as 2*25)",
        },
        KnownDiscrepancy {
            id: "zigzag-hyper-zagreb-constant",
            family: Family::Zigzag,
            quantity: Quantity::Index(IndexKind::Hlm2),
            p_min: 2,
            p_max: None,
            source: Some(Table3),
            description: "printed HLM2 constant is 72 below the value of its own partition \
                (4*36 summed as 2*36)",
        },
        KnownDiscrepancy {
            id: "zigzag-ly-p4",
            family: Family::Zigzag,
            quantity: Quantity::Index(IndexKind::Ly),
            p_min: 4,
            p_max: Some(4),
            source: Some(Table4),
            description: "table prints 5640 where its own closed form gives 5690",
        },
        KnownDiscrepancy {
            id: "rhombic-lso-table",
            family: Family::Rhombic,
            quantity: LSO,
            p_min: 5,
            p_max: Some(10),
            source: Some(Table6),
            description: "Sombor cells for p >= 5 sit 0.10 to 0.82 below the printed \
                radical closed form, outside two-decimal rounding",
        },
    ];
    for quantity in Quantity::VERIFIED {
        out.push(zigzag_partition(quantity));
    }
    out
}

/// Registry entries covering one report cell.
pub fn discrepancies_for(family: Family, quantity: Quantity, p: u32) -> Vec<KnownDiscrepancy> {
    known_discrepancies()
        .into_iter()
        .filter(|d| d.covers(family, quantity, p))
        .collect()
}
