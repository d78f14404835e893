use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not an isometry of the form (residual {residual:e})")]
    NotAnIsometry { residual: f64 },
    #[error("Lorentz map sends the upper sheet to the lower sheet (m33 = {m33})")]
    WrongSheet { m33: f64 },
    #[error("vector is null or zero under the form")]
    DegenerateVector,
    #[error("vector cannot be projected onto the surface: {0}")]
    NotProjectable(&'static str),
    #[error("point is not on the surface (residual {residual:e})")]
    NotOnSurface { residual: f64 },
    #[error("vector is not tangent at its base point (residual {residual:e})")]
    NotTangent { residual: f64 },
    #[error("operands belong to different geometries")]
    GeometryMismatch,
    #[error("direction is not a unit tangent vector (form norm² = {norm_sq})")]
    NotUnitDirection { norm_sq: f64 },
    #[error("tangent vector is not based at the given point")]
    BaseMismatch,
    #[error("points are antipodal; the shortest arc is not unique")]
    AntipodalPoints,
    #[error("points coincide; direction is undefined")]
    CoincidentPoints,
    #[error("inverse-trig argument {value} is outside its domain beyond roundoff")]
    DomainExcursion { value: f64 },
    #[error("invalid radius {0}: must be positive and finite")]
    InvalidRadius(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operation is not supported for {0} geometry")]
    UnsupportedGeometry(&'static str),
    #[error("quadrature did not converge (estimate {estimate:e}, requested {requested:e})")]
    QuadratureNonConvergent { estimate: f64, requested: f64 },
    #[error("theta {0} outside the open interval (0, pi)")]
    ThetaOutOfRange(f64),
    #[error("half-diagonal exceeds spherical bound: s = {s} but must be below {bound}")]
    HalfDiagonalTooLarge { s: f64, bound: f64 },
    #[error("invalid trial configuration: {0}")]
    ConfigInvalid(String),
}
