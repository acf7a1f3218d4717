//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 2 for usage errors, 3 for invalid input, 4 for I/O failures.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use polycycle_core::enumerate::{self, CatalogEntry, Family, Mode, Task};
use polycycle_core::series::{self, SeriesId};
use polycycle_core::symmetry::{symmetry_of_graph, symmetry_of_polycycle};
use polycycle_core::{families, Params, Polycycle};

use crate::io::{self, EntryInfo, PolycycleDocument};
use crate::render::{render_svg, RenderOptions};
use crate::{Error, Rayon};

#[derive(Debug, Parser)]
#[command(name = "polycycle", version, about = "Build, enumerate and inspect (R,q)-polycycles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
    Summary,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Barrel,
    SnubAntiprism,
    Monocycle,
    Triple,
    Series,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Check a JSON polycycle against the axioms.
    Validate { file: PathBuf },
    /// List elementary polycycles up to a face bound.
    Enumerate {
        #[arg(long)]
        q: u32,
        /// Allowed gon sizes, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<u32>,
        /// Defaults to 20 for q = 4 and 12 otherwise.
        #[arg(long)]
        max_faces: Option<usize>,
        #[arg(long)]
        totally_elementary: bool,
        /// Keep only one family: sporadic, series, barrel, antiprism, monocycle, triple.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "summary")]
        format: Format,
        #[arg(long, env = "POLYCYCLE_THREADS", default_value_t = 0)]
        threads: usize,
    },
    /// Cut every bridge and write the elementary pieces.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Glue two polycycles along open edges.
    Agglomerate {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        edge_a: usize,
        #[arg(long)]
        edge_b: usize,
        #[arg(long)]
        flip: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a member of a named family.
    Family {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        m: Option<usize>,
        /// Gon size (monocycle) or three sizes (triple), comma separated.
        #[arg(long, value_delimiter = ',')]
        i: Vec<usize>,
        /// Series endings, e.g. alpha-beta.
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        q: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a polycycle in a directory written by `enumerate --format json`.
    Classify {
        file: PathBuf,
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Print the automorphism groups.
    Symmetry { file: PathBuf },
    /// Draw a polycycle as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, default_value_t = 400.0)]
        size: f64,
        #[arg(long)]
        labels: bool,
    },
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

impl From<polycycle_core::Error> for Failure {
    fn from(e: polycycle_core::Error) -> Self {
        Failure::Run(e.into())
    }
}

type Res = Result<(), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Run(e)) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::Io { .. }) {
                4
            } else {
                3
            }
        }
    }
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), source }
}

fn load(path: &Path) -> Result<Polycycle, Error> {
    io::read_json(&fs::read(path).map_err(|e| io_err(path, e))?)
}

fn save(path: &Path, bytes: &[u8]) -> Result<(), Error> {
    fs::write(path, bytes).map_err(|e| io_err(path, e))
}

fn make_dir(path: &Path) -> Result<(), Error> {
    fs::create_dir_all(path).map_err(|e| io_err(path, e))
}

fn emit(p: &Polycycle, dest: Option<&Path>, out: &mut dyn Write) -> Res {
    let bytes = io::write_json(p);
    match dest {
        Some(path) => save(path, &bytes)?,
        None => out.write_all(&bytes).map_err(|e| io_err(Path::new("<stdout>"), e))?,
    }
    Ok(())
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Res {
    let mut say =
        |s: String| -> Res { writeln!(out, "{s}").map_err(|e| Failure::Run(io_err(Path::new("<stdout>"), e))) };
    match cmd {
        Cmd::Validate { file } => {
            let p = load(&file)?;
            say(format!(
                "valid: {} faces, {} holes, {} vertices, elementary: {}",
                p.face_count(),
                p.hole_count(),
                p.map().vertex_count(),
                p.is_elementary()
            ))
        }
        Cmd::Enumerate { q, r, max_faces, totally_elementary, family, out: dir, format, threads } => {
            let params = Params::new(r, q)?;
            let max = max_faces.unwrap_or(if q == 4 { 20 } else { 12 });
            let mut task = Task::new(params, max);
            if totally_elementary {
                task.mode = Mode::TotallyElementary;
            }
            if let Some(f) = &family {
                if !["sporadic", "series", "barrel", "antiprism", "monocycle", "triple"].contains(&f.as_str()) {
                    return Err(Failure::Usage(format!("unknown family tag {f:?}")));
                }
            }
            let mut cat = enumerate::catalog(&task, &Rayon::new(threads))?;
            if let Some(f) = &family {
                cat.retain(|e| if f == "sporadic" { e.is_sporadic() } else { e.family.kind() == f });
            }
            match format {
                Format::Summary => {
                    let text = summary(&cat, max);
                    if let Some(dir) = &dir {
                        make_dir(dir)?;
                        save(&dir.join("summary.txt"), text.as_bytes())?;
                    }
                    out.write_all(text.as_bytes()).map_err(|e| io_err(Path::new("<stdout>"), e))?;
                    Ok(())
                }
                Format::Json | Format::Svg => {
                    let dir = dir.ok_or_else(|| Failure::Usage("--out is required for json and svg output".into()))?;
                    make_dir(&dir)?;
                    let mut within = vec![0usize; max + 1];
                    for (index, e) in cat.iter().enumerate() {
                        within[e.face_count] += 1;
                        let stem = format!("f{:02}_{:03}", e.face_count, within[e.face_count]);
                        if let Format::Json = format {
                            let mut doc = PolycycleDocument::from_polycycle(&e.polycycle);
                            doc.catalog = Some(entry_info(e, index));
                            save(&dir.join(format!("{stem}.json")), &io::document_bytes(&doc))?;
                        } else {
                            let svg = render_svg(&e.polycycle, &RenderOptions::default())?;
                            save(&dir.join(format!("{stem}.svg")), svg.as_bytes())?;
                        }
                    }
                    say(format!("wrote {} entries to {}", cat.len(), dir.display()))
                }
            }
        }
        Cmd::Decompose { file, out: dir } => {
            let p = load(&file)?;
            let dec = p.decompose();
            make_dir(&dir)?;
            for (i, piece) in dec.pieces.iter().enumerate() {
                save(&dir.join(format!("piece_{i:02}.json")), &io::write_json(piece))?;
            }
            let seams: Vec<[[usize; 2]; 2]> =
                dec.seams.iter().map(|s| [[s.a.0, s.a.1 as usize], [s.b.0, s.b.1 as usize]]).collect();
            let text = serde_json::to_string(&seams).expect("seams serialize") + "\n";
            save(&dir.join("seams.json"), text.as_bytes())?;
            say(format!("{} pieces, {} seams", dec.pieces.len(), dec.seams.len()))
        }
        Cmd::Agglomerate { file_a, file_b, edge_a, edge_b, flip, out: dest } => {
            let a = load(&file_a)?;
            let b = load(&file_b)?;
            let g = a.agglomerate(edge_a, &b, edge_b, flip)?;
            emit(&g, dest.as_deref(), out)
        }
        Cmd::Family { kind, m, i, pair, n, q, out: dest } => {
            let need_m = || m.ok_or_else(|| Failure::Usage("--m is required".into()));
            let p = match kind {
                Kind::Barrel => families::barrel(need_m()?)?,
                Kind::SnubAntiprism => families::snub_antiprism(need_m()?)?,
                Kind::Monocycle => match i.as_slice() {
                    [s] => families::monocycle(*s)?,
                    _ => return Err(Failure::Usage("monocycle takes one --i".into())),
                },
                Kind::Triple => match i.as_slice() {
                    [a, b, c] => families::gon_triple(*a, *b, *c)?,
                    _ => return Err(Failure::Usage("triple takes --i a,b,c".into())),
                },
                Kind::Series => {
                    let pair = pair.ok_or_else(|| Failure::Usage("--pair is required".into()))?;
                    let id = SeriesId::parse(q, &pair)?;
                    series::series_member(id, n.unwrap_or(id.first_index()))?
                }
            };
            emit(&p, dest.as_deref(), out)
        }
        Cmd::Classify { file, catalog } => {
            let p = load(&file)?;
            let code = p.canonical_code();
            let mut names: Vec<PathBuf> = fs::read_dir(&catalog)
                .map_err(|e| io_err(&catalog, e))?
                .filter_map(|d| d.ok().map(|d| d.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            names.sort();
            for path in names {
                let bytes = fs::read(&path).map_err(|e| io_err(&path, e))?;
                let doc = io::read_document(&bytes)?;
                if doc.to_polycycle()?.canonical_code() != code {
                    continue;
                }
                let (family, index) = match doc.catalog {
                    Some(info) => (info.family, info.index.to_string()),
                    None => (enumerate::family_of(&p).to_string(), "-".into()),
                };
                let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                return say(format!("{family} {index} {name}"));
            }
            Err(polycycle_core::Error::NotInCatalog(p.face_count()).into())
        }
        Cmd::Symmetry { file } => {
            let p = load(&file)?;
            let ap = symmetry_of_polycycle(&p);
            let ag = symmetry_of_graph(&p);
            say(format!("aut_p {} {}", ap.order, ap.label()))?;
            say(format!("aut_g {} {}", ag.order, ag.label()))
        }
        Cmd::Render { file, svg, size, labels } => {
            let p = load(&file)?;
            let opts = RenderOptions { size, vertex_labels: labels, ..RenderOptions::default() };
            save(&svg, render_svg(&p, &opts)?.as_bytes())?;
            Ok(())
        }
    }
}

fn entry_info(e: &CatalogEntry, index: usize) -> EntryInfo {
    EntryInfo {
        aut_g: e.aut_g.order,
        aut_p: e.aut_p.order,
        extensible: e.extensible,
        family: e.family.to_string(),
        index,
        sporadic: e.is_sporadic(),
    }
}

/// One line per face count, `<faces> <sporadic> <series> <barrel> <antiprism>`,
/// then the total.
pub fn summary(cat: &[CatalogEntry], max_faces: usize) -> String {
    let mut rows = vec![[0usize; 4]; max_faces + 1];
    for e in cat {
        let col = match e.family {
            Family::Series(..) => 1,
            Family::Barrel(_) => 2,
            Family::SnubAntiprism(_) => 3,
            _ => 0,
        };
        rows[e.face_count][col] += 1;
    }
    let mut s = String::new();
    for (n, r) in rows.iter().enumerate().skip(1) {
        s.push_str(&format!("{n} {} {} {} {}\n", r[0], r[1], r[2], r[3]));
    }
    s.push_str(&format!("total elementary: {}\n", cat.len()));
    s
}
