//! Machine-readable reports.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use quiver_pi::group::{AbelianInvariants, GroupCertificate, GroupPresentation, OrderResult};
use quiver_pi::quiver::BoundQuiver;
use quiver_pi::relations::{HomotopyPartition, RelationSpaces};
use quiver_pi::Result;

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    pub display: String,
}

impl PresentationReport {
    pub fn new(p: &GroupPresentation) -> Self {
        PresentationReport {
            generators: p.generators.clone(),
            relators: p.relators.iter().map(|r| p.word_to_string(r)).collect(),
            display: p.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianReport {
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub display: String,
}

impl AbelianReport {
    pub fn new(a: &AbelianInvariants) -> Self {
        AbelianReport {
            free_rank: a.free_rank,
            torsion: a.torsion.iter().map(ToString::to_string).collect(),
            display: a.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum OrderReport {
    Finite { order: u64 },
    Inconclusive { coset_cap: usize },
}

impl OrderReport {
    pub fn new(order: OrderResult, cap: usize) -> Self {
        match order {
            OrderResult::Finite(order) => OrderReport::Finite { order },
            OrderResult::Inconclusive => OrderReport::Inconclusive { coset_cap: cap },
        }
    }

    pub fn text(&self) -> String {
        match self {
            OrderReport::Finite { order } => order.to_string(),
            OrderReport::Inconclusive { coset_cap } => format!("inconclusive at coset cap {coset_cap}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub simplified: PresentationReport,
    pub abelian_invariants: AbelianReport,
    pub order: OrderReport,
    pub summary: String,
}

impl GroupReport {
    pub fn new(cert: &GroupCertificate) -> Self {
        GroupReport {
            simplified: PresentationReport::new(&cert.simplified),
            abelian_invariants: AbelianReport::new(&cert.abelian),
            order: OrderReport::new(cert.order, cert.coset_cap),
            summary: cert.summary(),
        }
    }
}

/// Fundamental group of one presentation. Timing is left out of the JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input_digest: String,
    pub dimension: usize,
    pub truncation: usize,
    pub basepoint: String,
    pub tree: Vec<String>,
    pub raw: PresentationReport,
    pub relator_count: usize,
    pub group: GroupReport,
    #[serde(skip)]
    pub timing_ms: u128,
}

impl Report {
    pub fn build(bq: &BoundQuiver, input_digest: String, order_cap: usize) -> Result<Self> {
        let start = Instant::now();
        let spaces = RelationSpaces::new(bq)?;
        let partition = HomotopyPartition::from_spaces(&spaces);
        let tree = quiver_pi::quiver::spanning_tree(&bq.quiver, bq.basepoint);
        let pi1 = quiver_pi::pi1::fundamental_group_from_partition(bq, &partition, tree);
        let cert = GroupCertificate::new(&pi1.presentation, order_cap);
        Ok(Report {
            input_digest,
            dimension: spaces.dimension(),
            truncation: bq.truncation,
            basepoint: bq.quiver.vertex_name(bq.basepoint).to_string(),
            tree: pi1.tree.arrow_names(&bq.quiver).into_iter().map(String::from).collect(),
            raw: PresentationReport::new(&pi1.presentation),
            relator_count: pi1.relator_count,
            group: GroupReport::new(&cert),
            timing_ms: start.elapsed().as_millis(),
        })
    }

    pub fn text(&self, simplified: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input: {}", self.input_digest);
        let _ = writeln!(s, "dimension: {}", self.dimension);
        let _ = writeln!(s, "basepoint: {}", self.basepoint);
        let _ = writeln!(s, "spanning tree: {}", self.tree.join(", "));
        let _ = writeln!(s, "presentation: {}", self.raw.display);
        if simplified {
            let _ = writeln!(s, "simplified: {}", self.group.simplified.display);
        }
        let _ = writeln!(s, "abelian invariants: {}", self.group.abelian_invariants.display);
        let _ = writeln!(s, "order: {}", self.group.order.text());
        let _ = writeln!(s, "group: {}", self.group.summary);
        let _ = writeln!(s, "time: {} ms", self.timing_ms);
        s
    }
}

/// Structure summary printed by `check`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub input_digest: String,
    pub valid: bool,
    pub issues: Vec<String>,
    pub vertices: usize,
    pub arrows: usize,
    pub truncation: usize,
    pub triangular: bool,
    pub dimension: Option<usize>,
    pub constricted: Option<bool>,
    pub partition: Option<PartitionSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSummary {
    pub classes: usize,
    pub merged_blocks: usize,
    pub merges: usize,
    pub null_paths: usize,
}

impl PartitionSummary {
    pub fn new(p: &HomotopyPartition) -> Self {
        PartitionSummary {
            classes: p.classes.len(),
            merged_blocks: p.classes.iter().map(|c| c.merged().count()).sum(),
            merges: p.merge_count(),
            null_paths: p.classes.iter().map(|c| c.null.len()).sum(),
        }
    }
}

impl CheckReport {
    pub fn build(bq: &BoundQuiver, input_digest: String) -> Result<Self> {
        let validation = bq.validate();
        let q = &bq.quiver;
        let mut report = CheckReport {
            input_digest,
            valid: validation.is_valid(),
            issues: validation.issues.iter().map(ToString::to_string).collect(),
            vertices: q.vertex_count(),
            arrows: q.arrow_count(),
            truncation: bq.truncation,
            triangular: q.is_triangular(),
            dimension: None,
            constricted: None,
            partition: None,
        };
        if report.valid {
            let spaces = RelationSpaces::new(bq)?;
            report.dimension = Some(spaces.dimension());
            report.constricted = Some(q.arrows().iter().all(|a| spaces.class_dimension(a.source, a.target) == 1));
            report.partition = Some(PartitionSummary::new(&HomotopyPartition::from_spaces(&spaces)));
        }
        Ok(report)
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input: {}", self.input_digest);
        let _ = writeln!(s, "valid: {}", self.valid);
        for issue in &self.issues {
            let _ = writeln!(s, "  {issue}");
        }
        let _ = writeln!(s, "vertices: {}, arrows: {}, truncation: {}", self.vertices, self.arrows, self.truncation);
        let _ = writeln!(s, "triangular: {}", self.triangular);
        if let (Some(d), Some(c), Some(p)) = (self.dimension, self.constricted, &self.partition) {
            let _ = writeln!(s, "dimension: {d}");
            let _ = writeln!(s, "constricted: {c}");
            let _ = writeln!(
                s,
                "partition: {} classes, {} merged blocks, {} merges, {} null paths",
                p.classes, p.merged_blocks, p.merges, p.null_paths
            );
        }
        s
    }
}
