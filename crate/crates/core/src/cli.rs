//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::alcove::{self, AlcoveWeight};
use crate::classify;
use crate::error::Error;
use crate::golden;
use crate::group::Group;
use crate::lattices::{self, CentralElement};
use crate::levels;
use crate::report::{self, LevelsReport, SCHEMA};
use crate::rootsys::SimpleType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "loopreps", version, about = "Positive-energy representations of loop groups of G/Z")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// Group name, e.g. D4, Spin8, SU3, Sp2, E6.
    #[arg(long)]
    pub group: String,
    /// Central subgroup: triv, full, k<d>, or v/s/c for Spin(4m).
    #[arg(long, default_value = "full")]
    pub subgroup: String,
    #[arg(long, default_value_t = 1)]
    pub level: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fundamental and basic levels.
    Levels {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        subgroup: Option<String>,
        /// Largest rank when no group is given.
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Weights of the level alcove.
    Alcove {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1)]
        level: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Action of one central element on an alcove weight.
    Act {
        #[command(flatten)]
        common: Common,
        /// Dynkin labels, comma separated.
        #[arg(long)]
        weight: String,
        /// Special node of the central element (0 is the identity).
        #[arg(long)]
        element: usize,
    },
    /// Orbits of the subgroup on the alcove.
    Orbits {
        #[command(flatten)]
        common: Common,
    },
    /// Admissible commutator maps.
    Forms {
        #[command(flatten)]
        common: Common,
    },
    /// Irreducible representations of the loop group with discontinuous loops.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Representations factoring through the loop group of the quotient.
    ClassifyQuotient {
        #[command(flatten)]
        common: Common,
    },
    /// Extended Dynkin diagram and the diagram automorphisms from the center.
    Diagram {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Regenerate the fixture files.
    Golden {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, default_value_t = 2)]
        max_level: u32,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

/// Pads columns by character count so that `ℤ` and `—` line up.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let ncol = headers.len();
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, cell) in r.iter().enumerate().take(ncol) {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(cell);
                s.push_str(&" ".repeat(width[i] - cell.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn parse_weight(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Inapplicable(format!("cannot parse weight {s:?}")))
        })
        .collect()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownGroup(_) | Error::UnknownSubgroup { .. } | Error::InvalidRank { .. } => 2,
        _ => 1,
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::UnknownGroup(_) | Error::InvalidRank { .. } => {
            format!("{e}\nvalid group names: {}", SimpleType::GRAMMAR)
        }
        _ => e.to_string(),
    }
}

/// Runs the tool; returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", describe(&e));
            exit_code(&e)
        }
    }
}

fn emit<T: serde::Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => report::to_json(value) + "\n",
        Format::Table => table(),
    }
}

fn dispatch(cmd: Command) -> Result<String, Error> {
    match cmd {
        Command::Levels {
            group,
            subgroup,
            max_rank,
            format,
        } => {
            let rows = match group {
                Some(name) => {
                    let g = Group::parse(&name)?;
                    let (rs, c) = (g.root_system(), g.center());
                    match subgroup {
                        Some(s) => vec![levels::level_record(rs, c, &g.subgroup(&s)?)?],
                        None => g
                            .subgroups()
                            .iter()
                            .filter(|z| !z.is_trivial())
                            .map(|z| levels::level_record(rs, c, z))
                            .collect::<Result<_, _>>()?,
                    }
                }
                None => levels::levels_table(max_rank)?,
            };
            let doc = LevelsReport { schema: SCHEMA, rows };
            Ok(emit(format, &doc, || {
                let rows: Vec<Vec<String>> = doc
                    .rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.group.clone(),
                            r.z.clone(),
                            r.quotient.clone(),
                            r.fundamental_level.to_string(),
                            r.basic_level.to_string(),
                        ]
                    })
                    .collect();
                render_table(&["group", "Z", "G/Z", "ℓ_f", "ℓ_b"], &rows)
            }))
        }
        Command::Alcove { group, level, format } => {
            let g = Group::parse(&group)?;
            let doc = report::alcove_report(&g, level);
            Ok(emit(format, &doc, || {
                let rows: Vec<Vec<String>> = alcove::alcove(g.root_system(), level)
                    .iter()
                    .map(|w| {
                        let aff: Vec<String> =
                            w.affine_labels(g.root_system()).iter().map(i64::to_string).collect();
                        vec![w.to_string(), aff.join(",")]
                    })
                    .collect();
                render_table(&["weight", "affine labels"], &rows)
            }))
        }
        Command::Act {
            common,
            weight,
            element,
        } => {
            let g = Group::parse(&common.group)?;
            let z = g.subgroup(&common.subgroup)?;
            let el = CentralElement(element);
            if !z.contains(el) {
                return Err(Error::NotInSubgroup(element));
            }
            let rs = g.root_system();
            let lambda = AlcoveWeight::new(rs, parse_weight(&weight)?, common.level)?;
            let image = g.action().act(rs, el, &lambda)?;
            let doc = report::ActReport {
                schema: SCHEMA,
                group: rs.simple_type().name(),
                level: common.level,
                element,
                weight: lambda.to_string(),
                result: image.to_string(),
            };
            Ok(emit(common.format, &doc, || format!("{image}\n")))
        }
        Command::Orbits { common } => {
            let g = Group::parse(&common.group)?;
            let z = g.subgroup(&common.subgroup)?;
            let doc = report::orbits_report(&g, &z, common.level)?;
            Ok(emit(common.format, &doc, || {
                let rows: Vec<Vec<String>> = doc
                    .orbits
                    .iter()
                    .map(|o| {
                        let members: Vec<String> = o.members.iter().map(|m| join(m)).collect();
                        vec![
                            join(&o.members[0]),
                            o.members.len().to_string(),
                            o.stabilizer.clone(),
                            members.join(" "),
                        ]
                    })
                    .collect();
                render_table(&["orbit", "size", "stabilizer", "members"], &rows)
            }))
        }
        Command::Forms { common } => {
            let g = Group::parse(&common.group)?;
            let z = g.subgroup(&common.subgroup)?;
            let doc = report::forms_report(&g, &z, common.level)?;
            Ok(emit(common.format, &doc, || {
                let n = z.order();
                let mut headers: Vec<String> = vec!["form".into(), "center form".into(), "z".into()];
                headers.extend(z.elements().iter().map(|e| e.to_string()));
                let mut rows = Vec::new();
                for f in &doc.forms {
                    for (i, e) in z.elements().iter().enumerate() {
                        let mut row = if i == 0 {
                            vec![f.name.clone(), f.center_form.clone()]
                        } else {
                            vec![String::new(), String::new()]
                        };
                        row.push(e.to_string());
                        row.extend((0..n).map(|j| {
                            let [a, b] = f.table[i * n + j];
                            crate::linalg::qf(a, b).to_string()
                        }));
                        rows.push(row);
                    }
                }
                let h: Vec<&str> = headers.iter().map(String::as_str).collect();
                if doc.forms.is_empty() {
                    "no admissible commutator map at this level\n".to_string()
                } else {
                    render_table(&h, &rows)
                }
            }))
        }
        Command::Classify { common } => classify_cmd(common, false),
        Command::ClassifyQuotient { common } => classify_cmd(common, true),
        Command::Diagram { group, format } => {
            let g = Group::parse(&group)?;
            let doc = report::diagram_report(&g)?;
            Ok(emit(format, &doc, || {
                let mut s = String::new();
                let n = doc.cartan.len();
                let mut headers: Vec<String> = vec!["node".into(), "mark".into(), "comark".into()];
                headers.extend((0..n).map(|j| format!("a{j}")));
                let rows: Vec<Vec<String>> = (0..n)
                    .map(|i| {
                        let mut r = vec![i.to_string(), doc.marks[i].to_string(), doc.comarks[i].to_string()];
                        r.extend(doc.cartan[i].iter().map(i64::to_string));
                        r
                    })
                    .collect();
                let h: Vec<&str> = headers.iter().map(String::as_str).collect();
                s.push_str(&render_table(&h, &rows));
                s.push('\n');
                let rows: Vec<Vec<String>> = doc
                    .elements
                    .iter()
                    .map(|e| {
                        let p: Vec<String> = e.permutation.iter().map(usize::to_string).collect();
                        vec![e.element.to_string(), e.order.to_string(), p.join(" ")]
                    })
                    .collect();
                s.push_str(&render_table(&["element", "order", "node permutation"], &rows));
                s
            }))
        }
        Command::Golden {
            max_rank,
            max_level,
            out_dir,
        } => {
            let files = golden::emit_golden(max_rank, max_level, &out_dir)?;
            Ok(files.iter().map(|f| format!("{}\n", f.display())).collect())
        }
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn classify_cmd(common: Common, quotient: bool) -> Result<String, Error> {
    let g = Group::parse(&common.group)?;
    let z = g.subgroup(&common.subgroup)?;
    let cl = if quotient {
        classify::classify_quotient(&g, &z, common.level)?
    } else {
        classify::classify_lzg(&g, &z, common.level)?
    };
    let doc = report::classify_report(&g, &cl);
    Ok(emit(common.format, &doc, || {
        let mut s = format!(
            "{} / {}  level {}  ℓ_f = {}  ℓ_b = {}  forms {}  orbits {}  classes {}\n",
            doc.group,
            doc.subgroup,
            doc.level,
            doc.fundamental_level,
            doc.basic_level,
            cl.forms.len(),
            cl.orbits.len(),
            doc.classes.len()
        );
        if lattices::has_klein_center(g.root_system(), g.center()) || !doc.classes.is_empty() {
            let rows: Vec<Vec<String>> = doc
                .classes
                .iter()
                .map(|c| {
                    vec![
                        c.omega.clone(),
                        c.center_form.clone(),
                        join(&c.orbit[0]),
                        c.orbit.len().to_string(),
                        c.stabilizer.clone(),
                        c.multiplicity.to_string(),
                        if c.factors_through_quotient { "yes" } else { "no" }.to_string(),
                        c.characters.join(" | "),
                    ]
                })
                .collect();
            if !rows.is_empty() {
                s.push_str(&render_table(
                    &["omega", "center form", "orbit", "size", "stabilizer", "mult", "factors", "characters"],
                    &rows,
                ));
            }
        }
        s
    }))
}
