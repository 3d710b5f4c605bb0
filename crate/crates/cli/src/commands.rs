use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use mpls::canonical::{canonicalize, extract_mpls, reconstruct, BlockForm};
use mpls::geometry::Geometry;
use mpls::json::to_sorted_string_pretty;
use mpls::latin::{resolvability_report, verify_mpls};
use mpls::matching::{decompose_regular, duality_report};
use mpls::planes::{build_pg2_with_bound, geometry_from_incidence};
use mpls::{BinaryMatrix, LatinSquare, MplsSet, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{Cli, Command};

#[derive(Debug)]
pub enum Failure {
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Core {
        path: Option<PathBuf>,
        source: mpls::Error,
    },
    /// The input was read fine but does not have the checked property.
    Rejected(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Io { .. }
            | Failure::Core {
                source: mpls::Error::Parse { .. },
                ..
            } => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Failure::Core { path: Some(p), source } => write!(f, "{}: {source}", p.display()),
            Failure::Core { path: None, source } => write!(f, "{source}"),
            Failure::Rejected(why) => f.write_str(why),
        }
    }
}

impl From<mpls::Error> for Failure {
    fn from(source: mpls::Error) -> Self {
        Failure::Core { path: None, source }
    }
}

type Outcome = Result<(), Failure>;

fn at(path: &Path) -> impl FnOnce(mpls::Error) -> Failure + '_ {
    move |source| Failure::Core {
        path: Some(path.to_path_buf()),
        source,
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|source| Failure::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn create_dir(path: &Path) -> Outcome {
    fs::create_dir_all(path).map_err(|source| Failure::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_matrix(path: &Path) -> Result<BinaryMatrix, Failure> {
    BinaryMatrix::parse_inc(&read(path)?).map_err(at(path))
}

/// `L1.ls`, `L2.ls`, ... up to the first missing index.
fn read_squares(dir: &Path) -> Result<MplsSet, Failure> {
    let mut squares = Vec::new();
    loop {
        let path = dir.join(format!("L{}.ls", squares.len() + 1));
        if squares.is_empty() || path.exists() {
            squares.push(LatinSquare::parse_ls(&read(&path)?).map_err(at(&path))?);
        } else {
            break;
        }
    }
    Ok(MplsSet::from_squares(squares)?)
}

fn print_json<T: serde::Serialize>(value: &T) {
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(io::stdout().lock(), "{}", to_sorted_string_pretty(value));
}

/// The order `κ` with `κ² + κ + 1 = n`.
fn plane_order(n: usize) -> Option<usize> {
    (2..n).find(|k| k * k + k + 1 == n)
}

pub fn run(cli: &Cli) -> Outcome {
    let note = |msg: &str| {
        if cli.verbose > 0 {
            eprintln!("{msg}");
        }
    };
    match &cli.command {
        Command::GenPlane {
            order,
            out,
            json,
            shuffle,
            max_order,
        } => {
            let pb = build_pg2_with_bound(*order, *max_order)?;
            let mut m = pb.incidence;
            if *shuffle {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let mut rp: Vec<usize> = (0..m.rows()).collect();
                let mut cp: Vec<usize> = (0..m.cols()).collect();
                rp.shuffle(&mut rng);
                cp.shuffle(&mut rng);
                m = m.permute(&Permutation::new(rp)?, &Permutation::new(cp)?)?;
            }
            write(out, &m.to_inc_string())?;
            if let Some(path) = json {
                write(path, &geometry_from_incidence(&m)?.to_json())?;
            }
            note(&format!("PG(2, {order}): {} points and lines", m.rows()));
            Ok(())
        }
        Command::Canon { input, out, meta } => {
            let m = read_matrix(input)?;
            let bf = canonicalize(&m).map_err(at(input))?;
            write(out, &bf.matrix().to_inc_string())?;
            write(meta, &to_sorted_string_pretty(&bf.meta()))?;
            note(&format!("block form of order {}", bf.order()));
            Ok(())
        }
        Command::Extract { input, out_dir } => {
            let m = read_matrix(input)?;
            let order = plane_order(m.rows()).filter(|_| m.is_square()).ok_or_else(|| {
                Failure::Rejected(format!(
                    "{}: a {}x{} matrix is not k^2+k+1 square for any order k >= 2",
                    input.display(),
                    m.rows(),
                    m.cols()
                ))
            })?;
            let n = m.rows();
            let bf = BlockForm::from_parts(m, order, Permutation::identity(n), Permutation::identity(n))?;
            let set = extract_mpls(&bf).map_err(at(input))?;
            create_dir(out_dir)?;
            for (i, s) in set.squares().iter().enumerate() {
                write(&out_dir.join(format!("L{}.ls", i + 1)), &s.to_ls_string())?;
            }
            note(&format!("{} squares of order {order}", set.len()));
            Ok(())
        }
        Command::Reconstruct { in_dir, out } => {
            let set = read_squares(in_dir)?;
            write(out, &reconstruct(&set)?.to_inc_string())
        }
        Command::VerifyPlane { input } => {
            let g = geometry_from_incidence(&read_matrix(input)?).map_err(at(input))?;
            let verdict = g.plane_check();
            print_json(&json!({ "geometry": g.report(), "plane": verdict, "is_plane": verdict.is_plane() }));
            if verdict.is_plane() {
                Ok(())
            } else {
                Err(Failure::Rejected(format!(
                    "{}: not a projective plane (first definition {}, second definition {})",
                    input.display(),
                    verdict.first_def,
                    verdict.second_def
                )))
            }
        }
        Command::VerifyMpls { in_dir } => {
            let set = read_squares(in_dir)?;
            let report = verify_mpls(&set);
            print_json(&report);
            match report.violations.first() {
                None => Ok(()),
                Some(v) => Err(Failure::Rejected(format!(
                    "squares L{} and L{} are not projective: {:?}",
                    v.first + 1,
                    v.second + 1,
                    v.defect
                ))),
            }
        }
        Command::Decompose { input, out_dir } => {
            let m = read_matrix(input)?;
            let k = m.row_sums().first().copied().unwrap_or(0);
            let parts = decompose_regular(&m, k).map_err(at(input))?;
            create_dir(out_dir)?;
            for (i, p) in parts.iter().enumerate() {
                write(&out_dir.join(format!("P{}.inc", i + 1)), &p.to_inc_string())?;
            }
            note(&format!("{k} permutation matrices"));
            Ok(())
        }
        Command::Matching { input } => {
            let report = duality_report(&read_matrix(input)?).map_err(at(input))?;
            print_json(&report);
            Ok(())
        }
        Command::Classify { input } => {
            let g = Geometry::from_json(&read(input)?).map_err(at(input))?;
            let class = g.classify_v_eq_b().map_err(at(input))?;
            let injection = g.incident_injection().map_err(at(input))?;
            print_json(&json!({ "classification": class, "geometry": g.report(), "injection": injection }));
            Ok(())
        }
        Command::Resolve { in_dir, target } => {
            let set = read_squares(in_dir)?;
            let target = usize::try_from(*target - 1).unwrap_or(usize::MAX);
            let report = resolvability_report(&set, target)?;
            print_json(&report);
            if report.all_valid && report.pairwise_distinct {
                Ok(())
            } else {
                Err(Failure::Rejected(format!(
                    "L{}: resolutions are not valid and pairwise distinct",
                    target + 1
                )))
            }
        }
    }
}
