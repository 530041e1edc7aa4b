use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use cylgf::genfun::{catalog_sides, verify_equal, Comparison, IdentityId};
use cylgf::lemmas::{self, GridBounds, LemmaId, NestedSumSpec};
use cylgf::Result;

const DEFAULT_GRID: &str = include_str!("../verify_all.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct Grid {
    pub identities: IdentityGrid,
    pub gasper: GasperGrid,
    pub lemmas: LemmaGrid,
}

#[derive(Debug, Clone, Deserialize)]
pub struct IdentityGrid {
    pub order: usize,
    pub ids: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GasperGrid {
    pub order: usize,
    pub z_powers: Vec<u32>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct LemmaGrid {
    pub order: usize,
    pub max_blocks: usize,
    pub max_length: u32,
    pub max_k: u32,
}

impl Grid {
    pub fn builtin() -> Grid {
        toml::from_str(DEFAULT_GRID).expect("bundled grid parses")
    }

    pub fn with_order(mut self, order: usize) -> Grid {
        self.identities.order = order;
        self.gasper.order = order;
        self.lemmas.order = order;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: String,
    pub order: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub degree: usize,
    pub lhs: String,
    pub rhs: String,
}

impl Outcome {
    fn new(id: String, order: usize, cmp: &Comparison) -> Outcome {
        let mismatch = match cmp {
            Comparison::Equal => None,
            Comparison::Mismatch { degree, lhs, rhs } => Some(Mismatch {
                degree: *degree,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
        };
        Outcome {
            id,
            order,
            status: if mismatch.is_none() { "PASS" } else { "FAIL" }.to_string(),
            mismatch,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn text(&self) -> String {
        match &self.mismatch {
            None => format!("{} order={} PASS", self.id, self.order),
            Some(m) => format!(
                "{} order={} FAIL at q^{}: {} != {}",
                self.id, self.order, m.degree, m.lhs, m.rhs
            ),
        }
    }
}

pub fn verify_identity(id: &IdentityId, order: usize) -> Result<Outcome> {
    let (lhs, rhs) = catalog_sides(id, order)?;
    Ok(Outcome::new(id.to_string(), order, &verify_equal(&lhs, &rhs)?))
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaOutcome {
    pub id: String,
    pub family: String,
    pub blocks: Vec<u32>,
    pub k: Option<u32>,
    pub order: usize,
    pub status: String,
    #[serde(skip)]
    pub line: String,
}

impl LemmaOutcome {
    pub fn passed(&self) -> bool {
        self.status == "PASS"
    }
}

fn verify_lemma_point(spec: &NestedSumSpec, order: usize) -> Result<LemmaOutcome> {
    let cmp = lemmas::verify_lemma(spec, order)?;
    let line = lemmas::report_line(spec, order, &cmp);
    Ok(LemmaOutcome {
        id: LemmaId::for_spec(spec.clone())?.to_string(),
        family: spec.family.to_string(),
        blocks: spec.blocks.clone(),
        k: spec.fixed_k,
        order,
        status: line.rsplit(',').next().unwrap_or_default().to_string(),
        line,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub identities: Vec<Outcome>,
    pub lemmas: Vec<LemmaOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(Outcome::passed) && self.lemmas.iter().all(LemmaOutcome::passed)
    }
}

/// Runs every identity and lemma point in `grid`; results keep grid order.
pub fn run_grid(grid: &Grid) -> Result<Report> {
    let mut jobs: Vec<(IdentityId, usize)> = Vec::new();
    for id in &grid.identities.ids {
        jobs.push((id.parse()?, grid.identities.order));
    }
    for &j in &grid.gasper.z_powers {
        jobs.push((IdentityId::Gasper(j), grid.gasper.order));
    }
    let identities = jobs
        .par_iter()
        .map(|(id, order)| verify_identity(id, *order))
        .collect::<Result<Vec<_>>>()?;
    let specs = lemmas::lemma_grid(GridBounds {
        max_blocks: grid.lemmas.max_blocks,
        max_length: grid.lemmas.max_length,
        max_k: grid.lemmas.max_k,
    });
    let lemmas = specs
        .par_iter()
        .map(|spec| verify_lemma_point(spec, grid.lemmas.order))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report { identities, lemmas })
}
