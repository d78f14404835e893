use std::path::PathBuf;

use ccgeom::GeometryKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ccgeom",
    version,
    about = "Constant-curvature plane geometry: Pythagorean verification, constructions, areas, figures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Seeded random sweep over equiangular quadrilaterals; exit 1 if any criterion fails.
    Verify(VerifyArgs),
    /// Build one equiangular quadrilateral and print it with all residuals as JSON.
    Construct(ConstructArgs),
    /// Tabulate disk areas, optionally against quadrature.
    Area(AreaArgs),
    /// Draw a construction as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryArg {
    Euclidean,
    Spherical,
    Hyperbolic,
}

impl From<GeometryArg> for GeometryKind {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Euclidean => GeometryKind::Euclidean,
            GeometryArg::Spherical => GeometryKind::Spherical,
            GeometryArg::Hyperbolic => GeometryKind::Hyperbolic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometrySelection {
    Euclidean,
    Spherical,
    Hyperbolic,
    All,
}

impl GeometrySelection {
    pub fn kinds(self) -> Vec<GeometryKind> {
        match self {
            GeometrySelection::Euclidean => vec![GeometryKind::Euclidean],
            GeometrySelection::Spherical => vec![GeometryKind::Spherical],
            GeometrySelection::Hyperbolic => vec![GeometryKind::Hyperbolic],
            GeometrySelection::All => {
                vec![GeometryKind::Euclidean, GeometryKind::Spherical, GeometryKind::Hyperbolic]
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProjectionArg {
    /// Drop z; sphere only.
    Orthographic,
    /// (x, y, z) -> (x, y) / (r + z); hyperboloid only.
    Poincare,
    /// The plane as is, fitted to the figure; plane only.
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Element {
    Vertices,
    Sides,
    Diagonals,
    Disks,
    Circumcircle,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub geometry: GeometrySelection,
    /// Comma-separated radii; on the plane they only set the scale of the
    /// half-diagonal. Default `0.5,1,2`, or `1` when only the plane is selected.
    #[arg(long, value_delimiter = ',')]
    pub radius: Vec<f64>,
    /// Trials per (geometry, radius) setting.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Half-diagonal range as fractions of its bound (πr/2 on the sphere, 2r elsewhere).
    #[arg(long, value_parser = parse_range, default_value = "0.05:0.8")]
    pub s_frac: (f64, f64),
    /// Diagonal angle range as fractions of π.
    #[arg(long, value_parser = parse_range, default_value = "0.15:0.85")]
    pub theta_frac: (f64, f64),
    /// Relative threshold for the Pythagorean residual.
    #[arg(long)]
    pub tol_thm: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Inline description of one construction.
#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub geometry: Option<GeometryArg>,
    /// Curvature radius; ignored on the plane.
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Angle between the diagonals, radians (`pi/3`, `0.25pi` and the like also work).
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Geodesic distance from the center to each vertex.
    #[arg(long, allow_hyphen_values = true)]
    pub half_diagonal: Option<f64>,
    /// Center as `x,y,z`, projected onto the surface; the pole when absent.
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub center: Option<[f64; 3]>,
    /// Seed for a random diagonal direction; the first frame axis when absent.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub figure: FigureArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AreaArgs {
    #[arg(long, value_enum)]
    pub geometry: GeometryArg,
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Comma-separated geodesic radii.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    pub rho: Vec<f64>,
    /// Also integrate each area numerically.
    #[arg(long, value_enum, default_value = "off")]
    pub oracle: Toggle,
    /// Relative tolerance for the quadrature.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// A JSON document written by `construct`.
    #[arg(long, conflicts_with_all = ["geometry", "theta", "half_diagonal", "center", "seed"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub figure: FigureArgs,
    /// Defaults to the projection matching the geometry.
    #[arg(long, value_enum)]
    pub projection: Option<ProjectionArg>,
    /// Width and height in pixels.
    #[arg(long, default_value_t = 640)]
    pub size: u32,
    #[arg(long, default_value_t = 1.5)]
    pub stroke: f64,
    /// Comma-separated subset of vertices, sides, diagonals, disks, circumcircle.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Element::Disks, Element::Circumcircle, Element::Sides, Element::Diagonals, Element::Vertices])]
    pub elements: Vec<Element>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_float(s: &str) -> Result<f64, String> {
    s.trim().parse::<f64>().map_err(|_| format!("`{s}` is not a number"))
}

/// `lo:hi`
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected lo:hi, got `{s}`"))?;
    Ok((parse_float(lo)?, parse_float(hi)?))
}

/// `x,y,z`
pub fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z, got `{s}`"));
    }
    Ok([parse_float(parts[0])?, parse_float(parts[1])?, parse_float(parts[2])?])
}

/// A number, optionally written as a multiple or fraction of π:
/// `1.2`, `pi`, `pi/3`, `2pi/5`, `0.25pi`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    let Some(at) = t.find("pi") else {
        return parse_float(&t);
    };
    let (head, tail) = (t[..at].trim_end_matches('*'), &t[at + 2..]);
    let k = match head {
        "" => 1.0,
        "-" => -1.0,
        h => parse_float(h)?,
    };
    let d = match tail.strip_prefix('/') {
        Some(d) => parse_float(d)?,
        None if tail.is_empty() => 1.0,
        None => return Err(format!("cannot read angle `{s}`")),
    };
    Ok(k * std::f64::consts::PI / d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn angles() {
        assert_eq!(parse_angle("1.5").unwrap(), 1.5);
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/2").unwrap(), PI / 2.0);
        assert_eq!(parse_angle("2pi/5").unwrap(), 2.0 * PI / 5.0);
        assert_eq!(parse_angle("0.25*pi").unwrap(), 0.25 * PI);
        assert!(parse_angle("pix").is_err());
        assert!(parse_angle("half").is_err());
    }

    #[test]
    fn ranges_and_triples() {
        assert_eq!(parse_range("0.1:0.9").unwrap(), (0.1, 0.9));
        assert!(parse_range("0.1").is_err());
        assert_eq!(parse_triple("1,0,-2").unwrap(), [1.0, 0.0, -2.0]);
        assert!(parse_triple("1,2").is_err());
    }

    #[test]
    fn command_tree_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
