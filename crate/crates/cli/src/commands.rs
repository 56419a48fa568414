use std::fs;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use fission::bfile::{compare, LocalSequence, OeisId, OeisRef};
use fission::counting::Stat;
use fission::enumerate::Enumerator;
use fission::graph::{self, Decoration, Multigraph};
use fission::table::CountTable;
use fission::tree::{parse_tree, tree_from_json, tree_to_json, TreeView, View};
use fission::verify::{self, OracleBounds, Suite};

use crate::oeis::{self, NoData, Source};
use crate::{GraphFormat, GraphKind, TableFormat, TreeFormat};

pub enum Status {
    Success,
    Mismatch,
}

/// 1 for missing data, 2 for anything the caller got wrong.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<NoData>().is_some() {
        1
    } else {
        2
    }
}

pub fn count(stat: Stat, k_max: usize, n_max: usize, format: TableFormat, out: Option<&Path>) -> Result<Status> {
    let table = CountTable::compute(stat, k_max, n_max)?;
    let text = match format {
        TableFormat::Md => table.to_markdown(),
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json => table.to_json().to_string() + "\n",
    };
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(Status::Success)
}

pub fn enumerate(slope: usize, leaves: u64, mult: bool, format: TreeFormat) -> Result<Status> {
    let view = if mult { View::Multiplicity } else { View::LeafCount };
    let trees = Enumerator::default().exact(slope, leaves, view)?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    for t in &trees {
        match format {
            TreeFormat::Brackets => writeln!(out, "{t}")?,
            TreeFormat::Json => writeln!(out, "{}", tree_to_json(t))?,
        }
    }
    out.flush()?;
    Ok(Status::Success)
}

fn read_tree(text: &str) -> Result<TreeView> {
    if text.trim_start().starts_with('{') {
        Ok(tree_from_json(text)?)
    } else {
        Ok(TreeView::new(parse_tree(text)?, View::LeafCount)?)
    }
}

pub fn graph(tree: &str, kind: GraphKind, legs: Option<&[u64]>, format: GraphFormat) -> Result<Status> {
    let tree = read_tree(tree)?;
    let mut g = match (kind, tree.view()) {
        (GraphKind::Fission, View::LeafCount) => graph::fission_graph(&tree)?,
        (GraphKind::Fission, View::Multiplicity) => graph::equipped_fission_graph(&tree)?,
        (GraphKind::Stokes, View::LeafCount) => graph::stokes_quiver(&tree)?,
        (GraphKind::Stokes, View::Multiplicity) => bail!("Stokes quivers are built from leaf-count trees"),
    };
    if let Some(legs) = legs {
        if g.decoration() != &Decoration::None {
            bail!("--legs cannot be combined with a multiplicity tree");
        }
        g = graph::supernova(&g, legs)?;
    }
    print_graph(&g, format);
    Ok(Status::Success)
}

fn print_graph(g: &Multigraph, format: GraphFormat) {
    match format {
        GraphFormat::Dot => print!("{}", graph::to_dot(g)),
        GraphFormat::Json => println!("{}", graph::graph_to_json(g)),
    }
}

pub fn core(path: &Path) -> Result<Status> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).context("graph file is not valid JSON")?;
    let g = graph::graph_from_json(&value)?;
    let (core, legs) = graph::extract_core(&g)?;
    let core = core.with_decoration(Decoration::Legs(legs))?;
    println!("{}", graph::graph_to_json(&core));
    Ok(Status::Success)
}

pub fn verify(suite: Suite, k_max: usize, n_max: usize) -> Result<Status> {
    let report = verify::run(suite, OracleBounds { k_max, n_max })?;
    print!("{report}");
    Ok(if report.all_passed() { Status::Success } else { Status::Mismatch })
}

pub fn oeis(id: &OeisId, terms: usize, source: &Source) -> Result<Status> {
    let local = LocalSequence::for_id(id)?;
    let (text, origin) = oeis::load(id, source)?;
    let published = OeisRef::from_bfile(id.clone(), &text).with_context(|| format!("b-file from {origin}"))?;
    let cmp = compare(&published, terms)?;
    let shown: Vec<String> = published.terms.iter().take(cmp.compared).map(|t| t.to_string()).collect();
    match &cmp.first_mismatch {
        None => {
            println!(
                "{id} vs {}: match for {} terms from index {} ({origin})",
                local.description(),
                cmp.compared,
                cmp.offset
            );
            println!("{}", shown.join(","));
            Ok(Status::Success)
        }
        Some((index, theirs, ours)) => {
            println!(
                "{id} vs {}: mismatch at index {index}: published {theirs}, local {ours} ({origin})",
                local.description()
            );
            Ok(Status::Mismatch)
        }
    }
}
