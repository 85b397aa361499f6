//! Turning command-line flags into families.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde_json::json;
use starlab_core::{load_family, ClassParams, GenLimits, SetFamily};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassName {
    Level,
    Powerset,
    Sequences,
    Permutations,
    Multisets,
    Compositions,
    Partitions,
    Example1,
}

/// Class parameters shared by every command that can generate its input.
#[derive(Args, Clone, Debug, Default)]
pub struct ClassArgs {
    /// Generate the input from a class instead of reading files.
    #[arg(long, value_enum)]
    pub class: Option<ClassName>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Member size of the class (r for partitions and compositions).
    #[arg(long)]
    pub p: Option<usize>,
    /// Alphabet size for sequences and permutations.
    #[arg(long)]
    pub m: Option<usize>,
    /// Use C([n], base-r) instead of {[n]} as the base of sequences/permutations.
    #[arg(long = "base-r")]
    pub base_r: Option<usize>,
    /// Block sizes r_1..r_k for example1, comma separated.
    #[arg(long = "ex-r", value_delimiter = ',')]
    pub ex_r: Vec<usize>,
    /// Multiplicities q_1..q_k for example1, comma separated.
    #[arg(long = "ex-q", value_delimiter = ',')]
    pub ex_q: Vec<usize>,
    /// Intersection level built into example1 (defaults to --t).
    #[arg(long = "ex-t")]
    pub ex_t: Option<usize>,
}

fn need(v: Option<usize>, flag: &str, class: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::usage(format!("class {class} needs --{flag}")))
}

impl ClassArgs {
    pub fn params(&self, class: ClassName, t: Option<usize>) -> Result<ClassParams, CliError> {
        let name = format!("{class:?}").to_lowercase();
        let n = || need(self.n, "n", &name);
        let p = || need(self.p, "p", &name);
        Ok(match class {
            ClassName::Level => ClassParams::Level { n: n()?, r: p()? },
            ClassName::Powerset => ClassParams::Powerset { n: n()? },
            ClassName::Sequences => ClassParams::Sequences {
                n: n()?,
                m: need(self.m, "m", &name)?,
                base_r: self.base_r,
            },
            ClassName::Permutations => ClassParams::Permutations {
                n: n()?,
                m: need(self.m, "m", &name)?,
                base_r: self.base_r,
            },
            ClassName::Multisets => ClassParams::Multisets { n: n()?, r: p()? },
            ClassName::Compositions => ClassParams::Compositions { n: n()?, r: p()? },
            ClassName::Partitions => ClassParams::Partitions { n: n()?, r: p()? },
            ClassName::Example1 => ClassParams::Example1 {
                t: need(self.ex_t.or(t), "ex-t", &name)?,
                r: self.ex_r.clone(),
                q: self.ex_q.clone(),
            },
        })
    }
}

/// Where the families of a multi-family command come from.
#[derive(Args, Clone, Debug, Default)]
pub struct FamilySource {
    /// First family file.
    #[arg(long)]
    pub a: Option<PathBuf>,
    /// Second family file (defaults to the first).
    #[arg(long)]
    pub b: Option<PathBuf>,
    /// Further family files for tuple searches.
    #[arg(long = "family")]
    pub more: Vec<PathBuf>,
    /// Number of copies of a generated family.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[command(flatten)]
    pub class: ClassArgs,
}

pub fn load(path: &Path) -> Result<SetFamily, CliError> {
    let loaded = load_family(path).map_err(|e| CliError::in_file(path, e))?;
    if loaded.duplicates > 0 {
        crate::report::warn(json!({
            "warning": "duplicate sets collapsed",
            "file": path.display().to_string(),
            "duplicates": loaded.duplicates,
        }));
    }
    Ok(loaded.family)
}

impl FamilySource {
    pub fn families(
        &self,
        t: Option<usize>,
    ) -> Result<(Vec<SetFamily>, Option<ClassParams>), CliError> {
        match (&self.a, self.class.class) {
            (Some(_), Some(_)) => Err(CliError::usage(
                "give either --a/--b files or --class, not both",
            )),
            (None, None) => Err(CliError::usage("no input: give --a [--b] files or --class")),
            (Some(a), None) => {
                let first = load(a)?;
                let second = match &self.b {
                    Some(b) => load(b)?,
                    None => first.clone(),
                };
                let mut fams = vec![first, second];
                for p in &self.more {
                    fams.push(load(p)?);
                }
                Ok((fams, None))
            }
            (None, Some(class)) => {
                let params = self.class.params(class, t)?;
                let mut fams = params.generate(&GenLimits::default())?;
                if fams.len() == 1 {
                    if self.k < 2 {
                        return Err(CliError::usage("--k must be at least 2"));
                    }
                    fams = vec![fams[0].clone(); self.k];
                }
                Ok((fams, Some(params)))
            }
        }
    }

    /// A single family, from `--a` or `--class`.
    pub fn single(&self, t: Option<usize>) -> Result<(SetFamily, Option<ClassParams>), CliError> {
        let (mut fams, params) = self.families(t)?;
        if params
            .as_ref()
            .is_some_and(|p| matches!(p, ClassParams::Example1 { .. }))
        {
            return Err(CliError::usage(
                "example1 yields several families; write them with gen and pass --a",
            ));
        }
        Ok((fams.swap_remove(0), params))
    }
}
