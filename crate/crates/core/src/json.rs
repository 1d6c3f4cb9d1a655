//! JSON interchange for every structure the command line reads or writes.
//!
//! Rationals are strings `"p/q"` or `"n"`; plain JSON integers are accepted
//! on input. Matrices are nested row-major arrays. Parse errors name the
//! offending field by its path, e.g. `l2_00[1][2]`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::cohomology::{combinations, Cochain, LieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, serde_q, RMatrix, Rational, Tensor};
use crate::lie2::DifferentialCrossedModule;
use crate::linfty::{LInfHom, LInfTwoHom, TwoTermLInfinity};
use crate::twoterm::TwoTermComplex;
use crate::twovect::TwoVectorSpace;

fn err(field: &str, message: impl Into<String>) -> Error {
    Error::Json {
        field: field.to_string(),
        message: message.into(),
    }
}

/// Attaches the field name to an error raised by a constructor.
fn at<T>(field: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Json { .. } => e,
        other => err(field, other.to_string()),
    })
}

fn obj<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn get<'a>(o: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    o.get(key).ok_or_else(|| err(&join(path, key), "missing"))
}

fn join(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn usize_field(o: &Map<String, Value>, key: &str, path: &str) -> Result<usize> {
    let p = join(path, key);
    get(o, key, path)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| err(&p, "expected a non-negative integer"))
}

pub fn rational_to_value(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rational_from_value(v: &Value, path: &str) -> Result<Rational> {
    serde_q::from_value(v).map_err(|m| err(path, m))
}

pub fn vector_to_value(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_value).collect())
}

pub fn vector_from_value(v: &Value, len: usize, path: &str) -> Result<Vec<Rational>> {
    let a = v.as_array().ok_or_else(|| err(path, "expected an array"))?;
    if a.len() != len {
        return Err(err(path, format!("expected length {len}, found {}", a.len())));
    }
    a.iter()
        .enumerate()
        .map(|(i, x)| rational_from_value(x, &format!("{path}[{i}]")))
        .collect()
}

pub fn matrix_to_value(m: &RMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_to_value(r)).collect())
}

/// A `rows × cols` matrix. An empty array is accepted for any shape with
/// no entries.
pub fn matrix_from_value(v: &Value, rows: usize, cols: usize, path: &str) -> Result<RMatrix> {
    let a = v.as_array().ok_or_else(|| err(path, "expected an array of rows"))?;
    if rows * cols == 0 && a.is_empty() {
        return Ok(RMatrix::zeros(rows, cols));
    }
    if a.len() != rows {
        return Err(err(path, format!("expected {rows} rows, found {}", a.len())));
    }
    let data = a
        .iter()
        .enumerate()
        .map(|(i, r)| vector_from_value(r, cols, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?
        .concat();
    at(path, RMatrix::new(rows, cols, data))
}

pub fn tensor_to_value(t: &Tensor) -> Value {
    fn go(shape: &[usize], data: &[Rational]) -> Value {
        match shape {
            [] => rational_to_value(&data[0]),
            [_] => vector_to_value(data),
            [n, rest @ ..] => {
                let step: usize = rest.iter().product();
                Value::Array((0..*n).map(|i| go(rest, &data[i * step..(i + 1) * step])).collect())
            }
        }
    }
    go(t.shape(), t.data())
}

/// A nested array of the given shape. Empty arrays stand in for any
/// sub-block with no entries.
pub fn tensor_from_value(v: &Value, shape: &[usize], path: &str) -> Result<Tensor> {
    fn go(v: &Value, shape: &[usize], path: &str, out: &mut Vec<Rational>) -> Result<()> {
        let Some((&n, rest)) = shape.split_first() else {
            out.push(rational_from_value(v, path)?);
            return Ok(());
        };
        let a = v.as_array().ok_or_else(|| err(path, "expected an array"))?;
        let size: usize = shape.iter().product();
        if size == 0 && a.is_empty() {
            return Ok(());
        }
        if a.len() != n {
            return Err(err(path, format!("expected length {n}, found {}", a.len())));
        }
        for (i, x) in a.iter().enumerate() {
            go(x, rest, &format!("{path}[{i}]"), out)?;
        }
        Ok(())
    }
    let mut data = Vec::with_capacity(shape.iter().product());
    go(v, shape, path, &mut data)?;
    at(path, Tensor::from_data(shape, data))
}

/// Indented JSON with arrays of scalars kept on one line, so matrices
/// read row by row.
pub fn to_pretty_string(v: &Value) -> String {
    fn scalar(v: &Value) -> bool {
        !matches!(v, Value::Array(_) | Value::Object(_))
    }
    fn go(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent + 1);
        match v {
            Value::Array(a) if a.iter().all(scalar) => {
                let items: Vec<String> = a.iter().map(Value::to_string).collect();
                out.push_str(&format!("[{}]", items.join(", ")));
            }
            Value::Array(a) => {
                out.push_str("[\n");
                for (k, x) in a.iter().enumerate() {
                    out.push_str(&pad);
                    go(x, indent + 1, out);
                    out.push_str(if k + 1 < a.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push(']');
            }
            Value::Object(o) if !o.is_empty() => {
                out.push_str("{\n");
                for (k, (key, x)) in o.iter().enumerate() {
                    out.push_str(&pad);
                    out.push_str(&Value::String(key.clone()).to_string());
                    out.push_str(": ");
                    go(x, indent + 1, out);
                    out.push_str(if k + 1 < o.len() { ",\n" } else { "\n" });
                }
                out.push_str(&"  ".repeat(indent));
                out.push('}');
            }
            _ => out.push_str(&v.to_string()),
        }
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out.push('\n');
    out
}

/// Conversion to and from the self-contained JSON format of a structure.
pub trait JsonFormat: Sized {
    fn to_json(&self) -> Value;

    /// Parses the format at `path` (empty for a whole document).
    fn from_json_at(v: &Value, path: &str) -> Result<Self>;

    fn from_json(v: &Value) -> Result<Self> {
        Self::from_json_at(v, "")
    }

    fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| err("<document>", e.to_string()))?;
        Self::from_json(&v)
    }
}

impl JsonFormat for TwoTermComplex {
    fn to_json(&self) -> Value {
        json!({"dim0": self.dim0(), "dim1": self.dim1(), "d": matrix_to_value(self.d())})
    }

    fn from_json_at(v: &Value, path: &str) -> Result<Self> {
        let o = obj(v, path)?;
        let n0 = usize_field(o, "dim0", path)?;
        let n1 = usize_field(o, "dim1", path)?;
        let p = join(path, "d");
        let d = matrix_from_value(get(o, "d", path)?, n0, n1, &p)?;
        at(&p, TwoTermComplex::new(n0, n1, d))
    }
}

impl JsonFormat for TwoVectorSpace {
    fn to_json(&self) -> Value {
        json!({
            "dim0": self.dim0(),
            "dim1": self.dim1(),
            "s": matrix_to_value(self.s()),
            "t": matrix_to_value(self.t()),
            "i": matrix_to_value(self.i()),
        })
    }

    fn from_json_at(v: &Value, path: &str) -> Result<Self> {
        let o = obj(v, path)?;
        let n0 = usize_field(o, "dim0", path)?;
        let n1 = usize_field(o, "dim1", path)?;
        let m = |key: &str, r: usize, c: usize| matrix_from_value(get(o, key, path)?, r, c, &join(path, key));
        let (s, t, i) = (m("s", n0, n1)?, m("t", n0, n1)?, m("i", n1, n0)?);
        at(path, TwoVectorSpace::new(s, t, i))
    }
}

impl JsonFormat for TwoTermLInfinity {
    fn to_json(&self) -> Value {
        json!({
            "dim0": self.dim0(),
            "dim1": self.dim1(),
            "d": matrix_to_value(self.d_matrix()),
            "l2_00": tensor_to_value(self.l2_00()),
            "l2_01": tensor_to_value(self.l2_01()),
            "l3": tensor_to_value(self.l3()),
        })
    }

    fn from_json_at(v: &Value, path: &str) -> Result<Self> {
        let complex = TwoTermComplex::from_json_at(v, path)?;
        let o = obj(v, path)?;
        let (n0, n1) = (complex.dim0(), complex.dim1());
        let t = |key: &str, shape: &[usize]| tensor_from_value(get(o, key, path)?, shape, &join(path, key));
        let l2_00 = t("l2_00", &[n0, n0, n0])?;
        let l2_01 = t("l2_01", &[n0, n1, n1])?;
        let l3 = t("l3", &[n0, n0, n0, n1])?;
        at(path, TwoTermLInfinity::new(complex, l2_00, l2_01, l3))
    }
}

impl JsonFormat for LieAlgebra {
    fn to_json(&self) -> Value {
        json!({"dim": self.dim(), "bracket": tensor_to_value(self.bracket())})
    }

    /// Accepts `{"dim", "bracket"}` or a bare `[i][j][k]` array.
    fn from_json_at(v: &Value, path: &str) -> Result<Self> {
        let (n, b, p) = match v {
            Value::Array(a) => (a.len(), v, path.to_string()),
            _ => {
                let o = obj(v, path)?;
                (
                    usize_field(o, "dim", path)?,
                    get(o, "bracket", path)?,
                    join(path, "bracket"),
                )
            }
        };
        let t = tensor_from_value(b, &[n, n, n], &p)?;
        at(&p, LieAlgebra::new(t))
    }
}

pub fn representation_to_json(r: &Representation) -> Value {
    json!({"dimV": r.dim_v(), "rho": r.rho().iter().map(matrix_to_value).collect::<Vec<_>>()})
}

/// `{"dimV", "rho"}` with one `dimV × dimV` matrix per basis vector of
/// `algebra`.
pub fn representation_from_json(algebra: &LieAlgebra, v: &Value, path: &str) -> Result<Representation> {
    let o = obj(v, path)?;
    let m = usize_field(o, "dimV", path)?;
    let p = join(path, "rho");
    let a = get(o, "rho", path)?
        .as_array()
        .ok_or_else(|| err(&p, "expected an array of matrices"))?;
    if a.len() != algebra.dim() {
        return Err(err(
            &p,
            format!("expected {} matrices, found {}", algebra.dim(), a.len()),
        ));
    }
    let rho = a
        .iter()
        .enumerate()
        .map(|(i, x)| matrix_from_value(x, m, m, &format!("{p}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    at(&p, Representation::new(algebra.clone(), m, rho))
}

/// The key of an increasing index tuple, `"0<1<2"`; the empty tuple is `""`.
pub fn tuple_key(t: &[usize]) -> String {
    t.iter().map(usize::to_string).collect::<Vec<_>>().join("<")
}

fn parse_tuple_key(s: &str, path: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('<')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| err(path, format!("bad index tuple {s:?}")))
        })
        .collect()
}

/// `{"degree", "values"}` alone; the coefficients live in `rep`. Zero
/// values are omitted.
pub fn cochain_values_to_json(w: &Cochain) -> Value {
    let values: BTreeMap<String, Value> = w
        .tuples()
        .iter()
        .zip(w.values())
        .filter(|(_, v)| v.iter().any(|q| !q.is_zero()))
        .map(|(t, v)| (tuple_key(t), vector_to_value(v)))
        .collect();
    json!({"degree": w.degree(), "values": values})
}

/// Parses `{"degree", "values"}` against a known representation. Missing
/// tuples are zero.
pub fn cochain_values_from_json(rep: &Arc<Representation>, v: &Value, path: &str) -> Result<Cochain> {
    let o = obj(v, path)?;
    let degree = usize_field(o, "degree", path)?;
    let n = rep.algebra().dim();
    if degree > n {
        return Err(err(&join(path, "degree"), format!("exceeds the algebra dimension {n}")));
    }
    let tuples = combinations(n, degree);
    let mut values = vec![vec![Rational::zero(); rep.dim_v()]; tuples.len()];
    let p = join(path, "values");
    let map = get(o, "values", path)?
        .as_object()
        .ok_or_else(|| err(&p, "expected an object keyed by index tuples"))?;
    for (key, val) in map {
        let fp = format!("{p}.{key}");
        let t = parse_tuple_key(key, &fp)?;
        let pos = tuples
            .iter()
            .position(|u| u == &t)
            .ok_or_else(|| err(&fp, format!("not an increasing {degree}-tuple below {n}")))?;
        values[pos] = vector_from_value(val, rep.dim_v(), &fp)?;
    }
    at(path, Cochain::from_values(rep, degree, values))
}

impl JsonFormat for Cochain {
    /// The self-contained cochain file: the algebra, the representation
    /// and the values.
    fn to_json(&self) -> Value {
        let mut v = cochain_values_to_json(self);
        let o = v.as_object_mut().expect("object");
        o.insert("algebra".into(), self.rep().algebra().to_json());
        o.insert("rep".into(), representation_to_json(self.rep()));
        v
    }

    /// `"rep"` is optional and defaults to the trivial one-dimensional
    /// representation.
    fn from_json_at(v: &Value, path: &str) -> Result<Self> {
        let o = obj(v, path)?;
        let algebra = LieAlgebra::from_json_at(get(o, "algebra", path)?, &join(path, "algebra"))?;
        let rep = match o.get("rep") {
            Some(r) => representation_from_json(&algebra, r, &join(path, "rep"))?,
            None => Representation::trivial(&algebra, 1),
        };
        cochain_values_from_json(&Arc::new(rep), v, path)
    }
}

impl JsonFormat for DifferentialCrossedModule {
    fn to_json(&self) -> Value {
        json!({
            "g": self.g.to_json(),
            "h": self.h.to_json(),
            "t": matrix_to_value(&self.t),
            "alpha": tensor_to_value(&self.alpha),
        })
    }

    fn from_json_at(v: &Value, path: &str) -> Result<Self> {
        let o = obj(v, path)?;
        let g = LieAlgebra::from_json_at(get(o, "g", path)?, &join(path, "g"))?;
        let h = LieAlgebra::from_json_at(get(o, "h", path)?, &join(path, "h"))?;
        let (dg, dh) = (g.dim(), h.dim());
        let t = matrix_from_value(get(o, "t", path)?, dg, dh, &join(path, "t"))?;
        let alpha = tensor_from_value(get(o, "alpha", path)?, &[dg, dh, dh], &join(path, "alpha"))?;
        at(path, DifferentialCrossedModule::new(g, h, t, alpha))
    }
}

impl JsonFormat for LInfHom {
    fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "phi0": matrix_to_value(self.phi0()),
            "phi1": matrix_to_value(self.phi1()),
            "phi2": tensor_to_value(&self.phi2),
        })
    }

    /// `phi2[i][j][k]` is the `k`-th target `V₁` coefficient of `φ₂(e_i, e_j)`.
    fn from_json_at(v: &Value, path: &str) -> Result<Self> {
        let o = obj(v, path)?;
        let source = TwoTermLInfinity::from_json_at(get(o, "source", path)?, &join(path, "source"))?;
        let target = TwoTermLInfinity::from_json_at(get(o, "target", path)?, &join(path, "target"))?;
        let (n0, n1, m0, m1) = (source.dim0(), source.dim1(), target.dim0(), target.dim1());
        let phi0 = matrix_from_value(get(o, "phi0", path)?, m0, n0, &join(path, "phi0"))?;
        let phi1 = matrix_from_value(get(o, "phi1", path)?, m1, n1, &join(path, "phi1"))?;
        let phi2 = tensor_from_value(get(o, "phi2", path)?, &[n0, n0, m1], &join(path, "phi2"))?;
        at(path, LInfHom::new(Arc::new(source), Arc::new(target), phi0, phi1, phi2))
    }
}

impl JsonFormat for LInfTwoHom {
    fn to_json(&self) -> Value {
        json!({
            "from": self.from.to_json(),
            "to": self.to.to_json(),
            "tau": matrix_to_value(self.tau_matrix()),
        })
    }

    /// `tau` is the `dim1(target) × dim0(source)` matrix of the homotopy.
    fn from_json_at(v: &Value, path: &str) -> Result<Self> {
        let o = obj(v, path)?;
        let from = LInfHom::from_json_at(get(o, "from", path)?, &join(path, "from"))?;
        let to = LInfHom::from_json_at(get(o, "to", path)?, &join(path, "to"))?;
        let (n0, m1) = (from.source.dim0(), from.target.dim1());
        let tau = matrix_from_value(get(o, "tau", path)?, m1, n0, &join(path, "tau"))?;
        at(path, LInfTwoHom::new(from, to, tau))
    }
}
