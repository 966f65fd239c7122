//! Builder strings: `gl:2,1`, `osp+:2,2`, `q:2`, `magnetic:sl2`, ...

use isopair_core::constructions::{
    killing_form, magnetic_pair, osq_literal_dims, series_gl, series_osp, series_osq, series_q, sym2_pair, EnvelopePair,
    LieData,
};
use isopair_core::pairs::PairStructure;
use isopair_core::polyfields::wo_truncated_pair;
use isopair_core::Scalar;

use crate::CliError;

pub const KNOWN: &str = "gl:n,m  osp+:n,m  osp-:n,m  q:n  osq:n  magnetic:sl2|so3  sym2:so3  wo:n,m";

/// A built pair, with its matrix envelope when it has one.
pub struct Built {
    pub pair: PairStructure,
    pub envelope: Option<EnvelopePair>,
    /// Extra remarks printed to stderr.
    pub notes: Vec<String>,
}

fn numbers(args: &str, want: usize, src: &str) -> Result<Vec<usize>, CliError> {
    let ns: Result<Vec<usize>, _> = args.split(',').map(|s| s.trim().parse::<usize>()).collect();
    match ns {
        Ok(ns) if ns.len() == want => Ok(ns),
        _ => Err(CliError::Usage(format!("`{src}`: expected {want} comma-separated sizes"))),
    }
}

fn lie(name: &str) -> Result<LieData, CliError> {
    match name {
        "sl2" => Ok(LieData::sl2()),
        "so3" => Ok(LieData::so3()),
        _ => Err(CliError::Usage(format!("unknown Lie algebra `{name}` (sl2 or so3)"))),
    }
}

fn envelope(ep: Result<EnvelopePair, isopair_core::constructions::ConstructionError>) -> Result<Built, CliError> {
    let ep = ep.map_err(|e| CliError::Build(e.to_string()))?;
    Ok(Built { pair: ep.pair.clone(), envelope: Some(ep), notes: Vec::new() })
}

pub fn build(src: &str) -> Result<Built, CliError> {
    let (head, args) = src.split_once(':').ok_or_else(|| CliError::Usage(format!("`{src}`: expected name:args; known: {KNOWN}")))?;
    match head {
        "gl" => {
            let ns = numbers(args, 2, src)?;
            envelope(series_gl(ns[0], ns[1]))
        }
        "osp+" | "osp-" => {
            let ns = numbers(args, 2, src)?;
            envelope(series_osp(ns[0], ns[1], if head == "osp+" { 1 } else { -1 }))
        }
        "q" => envelope(series_q(numbers(args, 1, src)?[0])),
        "osq" => {
            let n = numbers(args, 1, src)?[0];
            let mut b = envelope(series_osq(n))?;
            let lit = osq_literal_dims(n);
            b.notes.push(format!(
                "osq({n}): dims {} / {} under the closed sign conditions; the literal conditions give {} / {} and are not closed",
                b.pair.v1().dims_string(),
                b.pair.v2().dims_string(),
                lit[0],
                lit[1]
            ));
            Ok(b)
        }
        "magnetic" => {
            let g = lie(args)?;
            let pair = magnetic_pair(&g, &killing_form(&g), 1).map_err(|e| CliError::Build(e.to_string()))?;
            Ok(Built { pair, envelope: None, notes: vec![format!("magnetic pair of {args} with the Killing form, sign +")] })
        }
        "sym2" => {
            let g = lie(args)?;
            let eta = killing_form(&g).scale(&Scalar::ratio(-1, 2));
            let r = sym2_pair(&g, &eta).map_err(|e| CliError::Build(e.to_string()))?;
            let p = r.primary();
            let mut notes = vec![format!("sym2 pair of {args} with -kappa/2; writing the `{}` reading", p.name)];
            for rd in &r.readings {
                notes.push(format!("  {} reading: verify {}", rd.name, if rd.report.pass() { "passes" } else { "fails" }));
            }
            Ok(Built { pair: p.pair.clone(), envelope: None, notes })
        }
        "wo" => {
            let ns = numbers(args, 2, src)?;
            let pair = wo_truncated_pair(ns[0], ns[1]);
            Ok(Built { pair, envelope: None, notes: vec!["degree truncation (W<=0, O<=1)".into()] })
        }
        _ => Err(CliError::Usage(format!("unknown builder `{head}`; known: {KNOWN}"))),
    }
}
