//! JSON instance files: complexes, orbit sets, prime orbits, homology
//! matrices, descent data and full Morse-Novikov instances.
//!
//! Readers walk a [`serde_json::Value`] through [`Node`], so every rejection
//! names the JSON path of the value at fault (`$.descent.H[0].matrix[1][0]`).
//! Writers produce the same layout, and `read(write(x)) == x`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use novikov_core::algebra::{parse_laurent, LaurentPoly, Matrix};
use novikov_core::complexes::{ComplexRing, IntComplex};
use novikov_core::morse_novikov::{CriticalPoint, MNInstance, NovikovIncidence};
use novikov_core::torsion_theorem::DescentSystem;
use novikov_core::zeta::{ClosedOrbit, OrbitSet, PrimeOrbit};
use novikov_core::Error as CoreError;

use crate::error::{At, CliError, CliResult};

/// Default `N_data` when an instance does not declare one.
pub const DEFAULT_DATA_ORDER: i64 = 16;

/// Parses JSON text, reporting syntax errors with line and column.
pub fn read_json(text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError::Syntax { line: e.line(), column: e.column(), message: e.to_string() })
}

/// A JSON value together with its path from the document root.
#[derive(Debug, Clone)]
pub struct Node<'a> {
    value: &'a Value,
    path: String,
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

impl<'a> Node<'a> {
    pub fn root(value: &'a Value) -> Self {
        Node { value, path: "$".into() }
    }

    pub fn path(&self) -> &str {
        &self.path
    }

    pub fn value(&self) -> &'a Value {
        self.value
    }

    pub fn err(&self, kind: &str, message: impl Into<String>) -> CliError {
        CliError::at(self.path.clone(), kind, message)
    }

    fn wrong_type(&self, want: &str) -> CliError {
        self.err("WrongType", format!("expected {want}, found {}", type_name(self.value)))
    }

    fn object(&self) -> CliResult<&'a Map<String, Value>> {
        self.value.as_object().ok_or_else(|| self.wrong_type("an object"))
    }

    pub fn is_object(&self) -> bool {
        self.value.is_object()
    }

    pub fn has(&self, key: &str) -> bool {
        self.value.get(key).is_some_and(|v| !v.is_null())
    }

    pub fn child(&self, key: &str) -> Node<'a> {
        Node { value: self.value.get(key).unwrap_or(&Value::Null), path: format!("{}.{key}", self.path) }
    }

    /// Optional member; `null` counts as absent.
    pub fn opt(&self, key: &str) -> CliResult<Option<Node<'a>>> {
        let obj = self.object()?;
        Ok(obj.get(key).filter(|v| !v.is_null()).map(|v| Node { value: v, path: format!("{}.{key}", self.path) }))
    }

    pub fn get(&self, key: &str) -> CliResult<Node<'a>> {
        self.opt(key)?.ok_or_else(|| self.child(key).err("MissingField", "required field is missing"))
    }

    pub fn items(&self) -> CliResult<Vec<Node<'a>>> {
        let arr = self.value.as_array().ok_or_else(|| self.wrong_type("an array"))?;
        Ok(arr.iter().enumerate().map(|(i, v)| Node { value: v, path: format!("{}[{i}]", self.path) }).collect())
    }

    pub fn as_str(&self) -> CliResult<&'a str> {
        self.value.as_str().ok_or_else(|| self.wrong_type("a string"))
    }

    pub fn as_i64(&self) -> CliResult<i64> {
        self.value.as_i64().ok_or_else(|| self.wrong_type("an integer"))
    }

    pub fn as_bool(&self) -> CliResult<bool> {
        self.value.as_bool().ok_or_else(|| self.wrong_type("a boolean"))
    }

    /// Integer in `lo..=hi`.
    pub fn as_in_range(&self, lo: i64, hi: i64) -> CliResult<i64> {
        let v = self.as_i64()?;
        if v < lo || v > hi {
            return Err(self.err("OutOfRange", format!("{v} is outside {lo}..={hi}")));
        }
        Ok(v)
    }

    /// `+1` or `-1`.
    pub fn as_sign(&self) -> CliResult<i8> {
        match self.as_i64()? {
            1 => Ok(1),
            -1 => Ok(-1),
            v => Err(self.err("InvalidSign", format!("expected +1 or -1, found {v}"))),
        }
    }

    /// Integer given as a JSON number or a decimal string (for large values).
    pub fn as_bigint(&self) -> CliResult<BigInt> {
        match self.value {
            Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integral JSON number")),
            Value::String(s) => s.trim().parse().map_err(|_| self.err("Parse", format!("{s:?} is not a decimal integer"))),
            _ => Err(self.wrong_type("an integer")),
        }
    }

    /// Laurent polynomial in the text syntax (`"1-t"`, `"2t^-1+3"`), or a
    /// bare JSON integer.
    pub fn as_poly(&self) -> CliResult<LaurentPoly> {
        match self.value {
            Value::String(s) => parse_laurent(s).at(&self.path),
            Value::Number(_) => Ok(LaurentPoly::constant(self.as_bigint()?)),
            _ => Err(self.wrong_type("a polynomial string")),
        }
    }
}

/// `node[key]` when it holds an object, otherwise `node` itself. Lets a
/// command accept either a bare section file or a full instance.
pub fn section<'a>(node: &Node<'a>, key: &str) -> Node<'a> {
    match node.value.get(key) {
        Some(v) if v.is_object() => node.child(key),
        _ => node.clone(),
    }
}

fn matrix_rows<'a>(node: &Node<'a>, rows: usize, cols: usize) -> CliResult<Vec<Vec<Node<'a>>>> {
    let r = node.items()?;
    if r.len() != rows {
        return Err(node.err("ShapeMismatch", format!("expected {rows} rows, found {}", r.len())));
    }
    r.iter()
        .map(|row| {
            let c = row.items()?;
            if c.len() != cols {
                return Err(row.err("ShapeMismatch", format!("expected {cols} entries, found {}", c.len())));
            }
            Ok(c)
        })
        .collect()
}

/// `rows x cols` matrix of polynomial entries.
pub fn read_poly_matrix(node: &Node, rows: usize, cols: usize) -> CliResult<Matrix<LaurentPoly>> {
    let entries = matrix_rows(node, rows, cols)?
        .iter()
        .map(|r| r.iter().map(Node::as_poly).collect::<CliResult<Vec<_>>>())
        .collect::<CliResult<Vec<_>>>()?;
    Matrix::from_rows(entries, cols, LaurentPoly::zero()).at(node.path())
}

/// Square integer matrix of any size.
pub fn read_square_int_matrix(node: &Node) -> CliResult<Matrix<BigInt>> {
    let n = node.items()?.len();
    let entries = matrix_rows(node, n, n)?
        .iter()
        .map(|r| r.iter().map(Node::as_bigint).collect::<CliResult<Vec<_>>>())
        .collect::<CliResult<Vec<_>>>()?;
    Matrix::from_rows(entries, n, BigInt::zero()).at(node.path())
}

fn check_entries(node: &Node, m: &Matrix<LaurentPoly>, ring: ComplexRing) -> CliResult<()> {
    for (i, j, e) in m.entries() {
        let ok = match ring {
            ComplexRing::Integers => e.is_constant(),
            ComplexRing::Laurent | ComplexRing::Novikov(_) => true,
            _ => e.is_polynomial(),
        };
        if !ok {
            let err = CoreError::EntryNotInRing { entry: e.to_string(), ring: ring.to_string() };
            return Err(CliError::core(format!("{}[{i}][{j}]", node.path()), &err));
        }
    }
    Ok(())
}

/// `{"ring": "Z[t]", "degrees": [{"basis": [..]}, ..], "boundaries": [{"deg": k, "matrix": [[..]]}]}`.
/// Missing boundaries are zero. `d∘d = 0` is checked.
pub fn read_complex(node: &Node) -> CliResult<IntComplex> {
    let ring_node = node.opt("ring")?;
    let order = node.opt("order")?.map(|o| o.as_in_range(1, i64::MAX)).transpose()?;
    let ring = match &ring_node {
        Some(r) => ComplexRing::parse(r.as_str()?, order).at(r.path())?,
        None => ComplexRing::Polynomials,
    };
    if matches!(ring, ComplexRing::RationalFunctions | ComplexRing::LaurentSeriesField(_)) {
        let at = ring_node.map(|r| r.path().to_string()).unwrap_or_else(|| node.path().into());
        return Err(CliError::at(at, "UnsupportedRing", format!("{ring} entries are not Laurent polynomials")));
    }
    let mut bases = Vec::new();
    for deg in node.get("degrees")?.items()? {
        let mut basis: Vec<String> = Vec::new();
        for label in deg.get("basis")?.items()? {
            let s = label.as_str()?;
            if basis.iter().any(|b| b == s) {
                return Err(label.err("DuplicateLabel", format!("label {s:?} repeats in this degree")));
            }
            basis.push(s.to_string());
        }
        bases.push(basis);
    }
    let zero = LaurentPoly::zero();
    let mut bd: Vec<_> = (1..bases.len()).map(|k| Matrix::zeros(bases[k - 1].len(), bases[k].len(), &zero)).collect();
    let mut origin: BTreeMap<usize, String> = BTreeMap::new();
    if let Some(list) = node.opt("boundaries")? {
        for b in list.items()? {
            let deg_node = b.get("deg")?;
            let k = deg_node.as_in_range(1, bases.len() as i64 - 1)? as usize;
            if origin.contains_key(&k) {
                return Err(deg_node.err("DuplicateDegree", format!("boundary d_{k} given twice")));
            }
            let mnode = b.get("matrix")?;
            let m = read_poly_matrix(&mnode, bases[k - 1].len(), bases[k].len())?;
            check_entries(&mnode, &m, ring)?;
            bd[k - 1] = m;
            origin.insert(k, b.path().to_string());
        }
    }
    let c = IntComplex::assemble(ring, bases, bd).at(node.path())?;
    c.validate().map_err(|e| {
        let at = match &e {
            CoreError::BoundarySquareNonzero { degree, .. } => origin.get(degree).cloned().unwrap_or_else(|| node.path().into()),
            _ => node.path().into(),
        };
        CliError::core(at, &e)
    })?;
    Ok(c)
}

/// `{"N_orb": 16, "orbits": [{"n": 1, "m": 1, "eps": 1, "count": 1}]}`; `count` defaults to 1.
pub fn read_orbits(node: &Node) -> CliResult<OrbitSet> {
    let complete = node.get("N_orb")?.as_in_range(0, i64::from(u32::MAX))?;
    let mut orbits = Vec::new();
    for o in node.get("orbits")?.items()? {
        let n = o.get("n")?.as_in_range(1, i64::from(u32::MAX))? as u32;
        let m = o.get("m")?.as_in_range(1, i64::from(u32::MAX))? as u32;
        let eps = o.get("eps")?.as_sign()?;
        let mut orbit = ClosedOrbit::new(n, m, eps);
        if let Some(c) = o.opt("count")? {
            let count = c.as_bigint()?;
            if count.is_negative() {
                return Err(c.err("Invalid", format!("orbit count {count} is negative")));
            }
            orbit = orbit.with_count(count);
        }
        orbits.push(orbit);
    }
    OrbitSet::new(orbits, complete).at(node.path())
}

/// `{"primes": [{"n": 1, "e1": -1, "e2": -1}]}`.
pub fn read_primes(node: &Node) -> CliResult<Vec<PrimeOrbit>> {
    node.get("primes")?
        .items()?
        .iter()
        .map(|p| {
            let n = p.get("n")?.as_in_range(1, i64::from(u32::MAX))? as u32;
            let e1 = p.get("e1")?.as_sign()?;
            let e2 = p.get("e2")?.as_sign()?;
            PrimeOrbit::new(n, e1, e2).at(p.path())
        })
        .collect()
}

/// `{"h": [[[1]], [[2,1],[1,1]], [[1]]]}`: one square integer matrix per degree.
pub fn read_homology(node: &Node) -> CliResult<Vec<Matrix<BigInt>>> {
    node.get("h")?.items()?.iter().map(read_square_int_matrix).collect()
}

fn degree_blocks<'a>(node: &Node<'a>, key: &str, valid: impl Fn(usize) -> Option<(usize, usize)>) -> CliResult<Vec<(usize, Node<'a>, Matrix<LaurentPoly>)>> {
    let mut out: Vec<(usize, Node<'a>, Matrix<LaurentPoly>)> = Vec::new();
    let Some(list) = node.opt(key)? else {
        return Ok(out);
    };
    for b in list.items()? {
        let deg_node = b.get("deg")?;
        let k = deg_node.as_in_range(0, i64::from(u32::MAX))? as usize;
        let (rows, cols) = valid(k).ok_or_else(|| deg_node.err("OutOfRange", format!("no {key} block in degree {k}")))?;
        if out.iter().any(|(d, _, _)| *d == k) {
            return Err(deg_node.err("DuplicateDegree", format!("{key}_{k} given twice")));
        }
        let mnode = b.get("matrix")?;
        let m = read_poly_matrix(&mnode, rows, cols)?;
        check_entries(&mnode, &m, ComplexRing::Polynomials)?;
        out.push((k, mnode, m));
    }
    Ok(out)
}

/// Descent data: `{"R": complex, "Nv": complex, "H": [{"deg", "matrix"}],
/// "sigma1": [{"gen", "vector"}], "stars": {"A": [..], "B": [..]}, "N_data": 16}`.
pub fn read_descent(node: &Node, default_order: i64) -> CliResult<DescentSystem> {
    let r = read_complex(&node.get("R")?)?;
    let nv = read_complex(&node.get("Nv")?)?;
    let top = r.len().max(nv.len());
    let rank = |c: &IntComplex, k: i64| if k < 0 || k as usize >= c.len() { 0 } else { c.rank(k as usize) };
    let n_data = match node.opt("N_data")? {
        Some(n) => n.as_in_range(1, i64::MAX)?,
        None => default_order,
    };
    let mut b = DescentSystem::builder(r.clone(), nv.clone()).n_data(n_data);

    for (k, mnode, m) in degree_blocks(node, "H", |k| (k < top).then(|| (rank(&r, k as i64), rank(&r, k as i64))))? {
        for (i, j, e) in m.entries() {
            if !e.is_zero() && e.valuation().is_none_or(|v| v < 1) {
                let err = CoreError::PositiveValuationRequired(format!("H_{k}[{i},{j}] = {e}"));
                return Err(CliError::core(format!("{}[{i}][{j}]", mnode.path()), &err));
            }
        }
        b = b.h(k, m);
    }

    if let Some(list) = node.opt("sigma1")? {
        let mut seen: Vec<String> = Vec::new();
        for s in list.items()? {
            let gen_node = s.get("gen")?;
            let gen = gen_node.as_str()?;
            let k = (0..nv.len())
                .find(|&k| nv.index_of(k, gen).is_some())
                .ok_or_else(|| CliError::core(gen_node.path(), &CoreError::UnknownLabel(gen.into())))?;
            if seen.iter().any(|g| g == gen) {
                return Err(gen_node.err("DuplicateLabel", format!("sigma1({gen}) given twice")));
            }
            seen.push(gen.into());
            let want = rank(&r, k as i64 - 1);
            let vnode = s.get("vector")?;
            let items = vnode.items()?;
            if items.len() != want {
                return Err(vnode.err("ShapeMismatch", format!("{gen} has degree {k}, so sigma1({gen}) needs rank R_{} = {want} entries, found {}", k as i64 - 1, items.len())));
            }
            let v = items.iter().map(Node::as_poly).collect::<CliResult<Vec<_>>>()?;
            for (i, e) in v.iter().enumerate() {
                if !e.is_polynomial() {
                    return Err(items[i].err("EntryNotInRing", format!("entry {e} does not belong to Z[t]")));
                }
            }
            b = b.sigma1(gen, v);
        }
    }

    if let Some(stars) = node.opt("stars")? {
        // A_k : N_k -> R_{k-1},  B_k : R_{k-1} -> N_{k-1}
        if stars.has("A") {
            for (k, _, m) in degree_blocks(&stars, "A", |k| (k <= top).then(|| (rank(&r, k as i64 - 1), rank(&nv, k as i64))))? {
                b = b.star_a(k, m);
            }
        }
        for (k, _, m) in degree_blocks(&stars, "B", |k| (1..=top).contains(&k).then(|| (rank(&nv, k as i64 - 1), rank(&r, k as i64 - 1))))? {
            b = b.star_b(k, m);
        }
    }
    b.build().at(node.path())
}

/// Full instance, see the crate README for the layout.
pub fn read_instance(node: &Node) -> CliResult<MNInstance> {
    let name = node.opt("name")?.map(|n| n.as_str().map(String::from)).transpose()?.unwrap_or_default();
    let points_node = node.get("points")?;
    let mut points: Vec<CriticalPoint> = Vec::new();
    for p in points_node.items()? {
        let label = p.get("label")?;
        let l = label.as_str()?;
        if points.iter().any(|q| q.label == l) {
            return Err(label.err("DuplicateLabel", format!("critical point {l:?} declared twice")));
        }
        let index = p.get("index")?.as_in_range(0, i64::from(u32::MAX))? as usize;
        points.push(CriticalPoint::new(l, index));
    }
    let max_index = points.iter().map(|p| p.index).max().unwrap_or(0);
    let dim = match node.opt("dim")? {
        Some(d) => {
            let d = d.as_in_range(0, i64::from(u32::MAX))? as usize;
            if d < max_index {
                return Err(node.child("dim").err("OutOfRange", format!("dimension {d} is below the largest index {max_index}")));
            }
            d
        }
        None => max_index,
    };
    let data_order = match node.opt("N_data")? {
        Some(n) => n.as_in_range(1, i64::MAX)?,
        None => DEFAULT_DATA_ORDER,
    };
    let allow_negative = node.opt("allow_negative_powers")?.map(|b| b.as_bool()).transpose()?.unwrap_or(false);

    let mut incidence = NovikovIncidence::new();
    let index_of = |l: &str| points.iter().find(|p| p.label == l).map(|p| p.index);
    if let Some(list) = node.opt("incidence")? {
        for e in list.items()? {
            let from_node = e.get("from")?;
            let to_node = e.get("to")?;
            let (from, to) = (from_node.as_str()?, to_node.as_str()?);
            let fi = index_of(from).ok_or_else(|| CliError::core(from_node.path(), &CoreError::UnknownLabel(from.into())))?;
            let ti = index_of(to).ok_or_else(|| CliError::core(to_node.path(), &CoreError::UnknownLabel(to.into())))?;
            if fi != ti + 1 {
                let err = CoreError::IndexMismatch { from: from.into(), to: to.into(), from_index: fi, to_index: ti };
                return Err(CliError::core(e.path(), &err));
            }
            if incidence.get(from, to).is_some() {
                return Err(e.err("DuplicateIncidence", format!("incidence {from} -> {to} given twice")));
            }
            let coeff_node = e.get("coeff")?;
            let c = coeff_node.as_poly()?;
            if let Some(v) = c.valuation().filter(|&v| v < 0 && !allow_negative) {
                return Err(CliError::core(coeff_node.path(), &CoreError::NegativePower { from: from.into(), to: to.into(), exponent: v }));
            }
            incidence.add(from, to, c);
        }
    }

    let mut inst = MNInstance::new(name, dim, points, incidence, data_order);
    inst.allow_negative_powers = allow_negative;
    let nov = inst.novikov_polynomial_complex().at(&format!("{}.incidence", node.path()))?;

    if let Some(s) = node.opt("simplicial")? {
        inst.simplicial = Some(read_complex(&s)?);
    }
    if let Some(o) = node.opt("orbits")? {
        inst.orbits = Some(read_orbits(&o)?);
    }
    if let Some(d) = node.opt("descent")? {
        inst.descent = Some(read_descent(&d, data_order)?);
    }
    if let Some(list) = node.opt("comparison")? {
        let Some(simp) = &inst.simplicial else {
            return Err(list.err("MissingData", "a comparison map needs a simplicial complex"));
        };
        let len = nov.len().max(simp.len());
        let rank = |c: &IntComplex, k: usize| if k < c.len() { c.rank(k) } else { 0 };
        let mut maps: Vec<_> = (0..len).map(|k| Matrix::zeros(rank(simp, k), rank(&nov, k), &LaurentPoly::zero())).collect();
        for (k, _, m) in degree_blocks(&node.clone(), "comparison", |k| (k < len).then(|| (rank(simp, k), rank(&nov, k))))? {
            maps[k] = m;
        }
        inst.comparison = Some(maps);
        inst.comparison_map().at(list.path())?;
    }
    Ok(inst)
}

fn poly_text(p: &LaurentPoly) -> Value {
    Value::String(p.to_string())
}

fn matrix_json(m: &Matrix<LaurentPoly>) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| poly_text(m.get(i, j))).collect())).collect())
}

fn blocks_json<'m>(blocks: impl Iterator<Item = (usize, &'m Matrix<LaurentPoly>)>) -> Value {
    Value::Array(blocks.filter(|(_, m)| !m.is_zero()).map(|(k, m)| json!({ "deg": k, "matrix": matrix_json(m) })).collect())
}

pub fn write_complex(c: &IntComplex) -> Value {
    let mut obj = Map::new();
    obj.insert("ring".into(), Value::String(c.ring().to_string()));
    if let ComplexRing::PowerSeries(n) | ComplexRing::Novikov(n) = c.ring() {
        obj.insert("order".into(), json!(n));
    }
    obj.insert("degrees".into(), Value::Array(c.bases().iter().map(|b| json!({ "basis": b })).collect()));
    obj.insert("boundaries".into(), blocks_json(c.boundaries().iter().enumerate().map(|(i, m)| (i + 1, m))));
    Value::Object(obj)
}

pub fn write_orbits(s: &OrbitSet) -> Value {
    let orbits: Vec<Value> = s
        .orbits()
        .iter()
        .map(|o| {
            let mut v = json!({ "n": o.n, "m": o.m, "eps": o.eps });
            if o.count != BigInt::from(1) {
                v["count"] = Value::String(o.count.to_string());
            }
            v
        })
        .collect();
    json!({ "N_orb": s.complete_below(), "orbits": orbits })
}

pub fn write_primes(p: &[PrimeOrbit]) -> Value {
    json!({ "primes": p.iter().map(|p| json!({ "n": p.n, "e1": p.e1, "e2": p.e2 })).collect::<Vec<_>>() })
}

pub fn write_homology(h: &[Matrix<BigInt>]) -> Value {
    let mats: Vec<Value> = h
        .iter()
        .map(|m| Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| Value::String(m.get(i, j).to_string())).collect())).collect()))
        .collect();
    json!({ "h": mats })
}

/// Drops the empty degree a [`DescentSystem`] appends to `R` and `N`, so the
/// builder restores the same padding on reading.
fn unpadded(c: &IntComplex) -> IntComplex {
    let l = c.len();
    if l == 0 || !c.basis(l - 1).is_empty() {
        return c.clone();
    }
    let bd = c.boundaries()[..l.saturating_sub(2).min(c.boundaries().len())].to_vec();
    IntComplex::assemble(c.ring(), c.bases()[..l - 1].to_vec(), bd).expect("prefix of a complex")
}

pub fn write_descent(s: &DescentSystem) -> Value {
    let mut sigma = Vec::new();
    for (k, label) in s.generators() {
        let j = s.nv().index_of(k, label).expect("generator of N");
        let col = &s.sigma1()[k];
        if col.rows() == 0 {
            continue;
        }
        let v: Vec<Value> = (0..col.rows()).map(|i| poly_text(col.get(i, j))).collect();
        if v.iter().any(|e| e != "0") {
            sigma.push(json!({ "gen": label, "vector": v }));
        }
    }
    let mut stars = Map::new();
    if s.star_a_given() {
        stars.insert("A".into(), blocks_json(s.star_a().iter().enumerate()));
    }
    stars.insert("B".into(), blocks_json(s.star_b().iter().enumerate()));
    json!({
        "R": write_complex(&unpadded(s.r())),
        "Nv": write_complex(&unpadded(s.nv())),
        "H": blocks_json(s.h().iter().enumerate()),
        "sigma1": sigma,
        "stars": stars,
        "N_data": s.n_data(),
    })
}

pub fn write_instance(inst: &MNInstance) -> Value {
    let mut obj = Map::new();
    obj.insert("name".into(), json!(inst.name));
    obj.insert("dim".into(), json!(inst.dim));
    obj.insert("points".into(), Value::Array(inst.points.iter().map(|p| json!({ "label": p.label, "index": p.index })).collect()));
    obj.insert(
        "incidence".into(),
        Value::Array(inst.incidence.iter().map(|(f, t, c)| json!({ "from": f, "to": t, "coeff": c.to_string() })).collect()),
    );
    obj.insert("N_data".into(), json!(inst.data_order));
    if inst.allow_negative_powers {
        obj.insert("allow_negative_powers".into(), json!(true));
    }
    if let Some(s) = &inst.simplicial {
        obj.insert("simplicial".into(), write_complex(s));
    }
    if let Some(maps) = &inst.comparison {
        obj.insert("comparison".into(), blocks_json(maps.iter().enumerate()));
    }
    if let Some(o) = &inst.orbits {
        obj.insert("orbits".into(), write_orbits(o));
    }
    if let Some(d) = &inst.descent {
        obj.insert("descent".into(), write_descent(d));
    }
    Value::Object(obj)
}
