//! Multiplicative bases of the superspace ring and the four super-Schur
//! families.
//!
//! The constituents come from the closed multinomial forms of the
//! exponential generating series:
//!
//! * `h_n = Σ_{λ⊢n} x_λ / |Aut(λ)|`
//! * `e_n = Σ_{λ⊢n} (−1)^{n−ℓ(λ)} x_λ / |Aut(λ)|`
//! * `h̃_n = Σ_{r≥0} θ_{r+1} h_{n−r}`
//! * `ẽ_n = Σ_{r≥0} (−1)^r θ_{r+1} e_{n−r}`
//!
//! Super-Schur functions are built by operator strings (see
//! [`crate::operators`]) and cached per family in a [`SchurTable`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rat_int, Bidegree, Rat, SuperMonomial, SuperPolynomial, TermJson};
use crate::superpartition::{aut_order, partitions_of, SuperPartition};

fn basis_cache() -> &'static Mutex<HashMap<(char, u32), SuperPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<(char, u32), SuperPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(name: char, n: u32, build: impl FnOnce() -> SuperPolynomial) -> SuperPolynomial {
    if let Some(hit) = basis_cache().lock().unwrap().get(&(name, n)) {
        return hit.clone();
    }
    let value = build();
    basis_cache()
        .lock()
        .unwrap()
        .insert((name, n), value.clone());
    value
}

/// `h_n`, the homogeneous symmetric function.
pub fn homogeneous(n: u32) -> SuperPolynomial {
    cached('h', n, || {
        let mut out = SuperPolynomial::zero();
        for lambda in partitions_of(n) {
            let coeff = Rat::one() / aut_order(&lambda);
            out.add_term(SuperMonomial::new(vec![], lambda), coeff);
        }
        out
    })
}

/// `e_n`, the elementary symmetric function.
pub fn elementary(n: u32) -> SuperPolynomial {
    cached('e', n, || {
        let mut out = SuperPolynomial::zero();
        for lambda in partitions_of(n) {
            let mut coeff = Rat::one() / aut_order(&lambda);
            if (n as usize - lambda.len()) % 2 == 1 {
                coeff = -coeff;
            }
            out.add_term(SuperMonomial::new(vec![], lambda), coeff);
        }
        out
    })
}

/// `h̃_n = Σ_{r≥0} θ_{r+1} h_{n−r}`.
pub fn homogeneous_tilde(n: u32) -> SuperPolynomial {
    cached('H', n, || {
        let mut out = SuperPolynomial::zero();
        for r in 0..=n {
            out += SuperPolynomial::theta(r + 1).mul(&homogeneous(n - r));
        }
        out
    })
}

/// `ẽ_n = Σ_{r≥0} (−1)^r θ_{r+1} e_{n−r}`.
pub fn elementary_tilde(n: u32) -> SuperPolynomial {
    cached('E', n, || {
        let mut out = SuperPolynomial::zero();
        for r in 0..=n {
            let term = SuperPolynomial::theta(r + 1).mul(&elementary(n - r));
            if r % 2 == 0 {
                out += term;
            } else {
                out -= term;
            }
        }
        out
    })
}

/// Power-sum superbasis element `𝒳_Λ = θ_{Λ₁+1}…θ_{Λ_m+1} x_{Λ_{m+1}}…x_{Λ_N}`
/// in canonical monomial form (the θ-indices of the definition are
/// decreasing, so canonicalization contributes `(−1)^binom(m,2)`).
pub fn power_sum(sp: &SuperPartition) -> SuperPolynomial {
    let mut out = SuperPolynomial::one();
    for &a in sp.antisymmetric_parts() {
        out = out.mul(&SuperPolynomial::theta(a + 1));
    }
    for &s in sp.symmetric_parts() {
        out = out.mul(&SuperPolynomial::x(s));
    }
    out
}

/// `ȟ_Λ = θ_{Λ₁+1}…θ_{Λ_m+1} h_{Λ_{m+1}}…h_{Λ_ℓ}`.
pub fn h_check(sp: &SuperPartition) -> SuperPolynomial {
    let mut out = SuperPolynomial::one();
    for &a in sp.antisymmetric_parts() {
        out = out.mul(&SuperPolynomial::theta(a + 1));
    }
    for &s in sp.symmetric_parts() {
        out = out.mul(&homogeneous(s));
    }
    out
}

/// The four super-Schur families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SchurType {
    /// `s_Λ`
    I,
    /// `s*_Λ`
    IStar,
    /// `s̄_Λ`
    II,
    /// `s̄*_Λ`
    IIStar,
}

impl SchurType {
    pub const ALL: [SchurType; 4] = [
        SchurType::I,
        SchurType::IStar,
        SchurType::II,
        SchurType::IIStar,
    ];

    /// The family dual under the scalar product.
    pub fn dual(self) -> Self {
        match self {
            SchurType::I => SchurType::IStar,
            SchurType::IStar => SchurType::I,
            SchurType::II => SchurType::IIStar,
            SchurType::IIStar => SchurType::II,
        }
    }
}

impl fmt::Display for SchurType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            SchurType::I => "I",
            SchurType::IStar => "Istar",
            SchurType::II => "II",
            SchurType::IIStar => "IIstar",
        };
        write!(f, "{tag}")
    }
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
#[error("unknown Schur type {0:?} (expected I, Istar, II or IIstar)")]
pub struct ParseSchurTypeError(pub String);

impl FromStr for SchurType {
    type Err = ParseSchurTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(SchurType::I),
            "Istar" | "I*" => Ok(SchurType::IStar),
            "II" => Ok(SchurType::II),
            "IIstar" | "II*" => Ok(SchurType::IIStar),
            other => Err(ParseSchurTypeError(other.to_string())),
        }
    }
}

/// Grow-only cache of super-Schur expansions per `(family, superpartition)`,
/// optionally mirrored on disk as one JSON file per `(family, bidegree)`
/// block.
#[derive(Default)]
pub struct SchurTable {
    cache: RwLock<HashMap<(SchurType, SuperPartition), Arc<SuperPolynomial>>>,
    cache_dir: Option<PathBuf>,
}

const CACHE_FORMAT: &str = "superschur-cache-v1";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    family: String,
    total: u32,
    fermionic: u32,
    entries: BTreeMap<String, Vec<TermJson>>,
}

impl SchurTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// A table backed by an on-disk block cache rooted at `dir`.
    pub fn with_cache_dir(dir: PathBuf) -> Self {
        Self {
            cache: RwLock::new(HashMap::new()),
            cache_dir: Some(dir),
        }
    }

    /// The super-Schur function of the given family, built from its
    /// operator string and cached.
    pub fn schur(&self, ty: SchurType, sp: &SuperPartition) -> Arc<SuperPolynomial> {
        if let Some(hit) = self.cache.read().unwrap().get(&(ty, sp.clone())) {
            return hit.clone();
        }
        if let Some(hit) = self.load_from_disk(ty, sp) {
            return hit;
        }
        let value = Arc::new(self.build(ty, sp));
        self.store(ty, sp, value.clone());
        value
    }

    fn build(&self, ty: SchurType, sp: &SuperPartition) -> SuperPolynomial {
        use crate::operators;
        match ty {
            SchurType::I | SchurType::IStar => match sp.remove_first_row() {
                None => SuperPolynomial::one(),
                Some((row, tail)) => {
                    let tail_poly = self.schur(ty, &tail);
                    let mode = match ty {
                        SchurType::I => {
                            operators::bernstein_b(row.star as i64, row.fermionic as u8)
                        }
                        _ => operators::bernstein_c(row.star as i64, row.fermionic as u8),
                    };
                    mode.apply(&tail_poly)
                }
            },
            // the barred strings telescope through the φ-conjugation:
            // s̄_Λ = (φ^⊥)⁻¹ s*_Λ and s̄*_Λ = φ(s_Λ)
            SchurType::II => {
                let star = self.schur(SchurType::IStar, sp);
                crate::operators::phi_perp_inverse(&star)
            }
            SchurType::IIStar => {
                let s = self.schur(SchurType::I, sp);
                crate::operators::phi(&s)
            }
        }
    }

    fn store(&self, ty: SchurType, sp: &SuperPartition, value: Arc<SuperPolynomial>) {
        self.cache
            .write()
            .unwrap()
            .insert((ty, sp.clone()), value.clone());
        if self.cache_dir.is_some() {
            self.append_to_disk(ty, sp, &value);
        }
    }

    fn block_path(&self, ty: SchurType, degree: Bidegree) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|dir| {
            dir.join(format!(
                "{CACHE_FORMAT}_{ty}_{}_{}.json",
                degree.total, degree.fermionic
            ))
        })
    }

    fn load_from_disk(&self, ty: SchurType, sp: &SuperPartition) -> Option<Arc<SuperPolynomial>> {
        let degree = Bidegree::new(sp.total_degree(), sp.fermionic_degree() as u32);
        let path = self.block_path(ty, degree)?;
        let text = std::fs::read_to_string(path).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        if file.format != CACHE_FORMAT {
            return None;
        }
        let mut found = None;
        let mut cache = self.cache.write().unwrap();
        for (key, terms) in &file.entries {
            let entry_sp: SuperPartition = key.parse().ok()?;
            let poly = Arc::new(SuperPolynomial::from_json_terms(terms).ok()?);
            if entry_sp == *sp {
                found = Some(poly.clone());
            }
            cache.insert((ty, entry_sp), poly);
        }
        found
    }

    fn append_to_disk(&self, ty: SchurType, sp: &SuperPartition, value: &SuperPolynomial) {
        let degree = Bidegree::new(sp.total_degree(), sp.fermionic_degree() as u32);
        let Some(path) = self.block_path(ty, degree) else {
            return;
        };
        let mut file = std::fs::read_to_string(&path)
            .ok()
            .and_then(|text| serde_json::from_str::<CacheFile>(&text).ok())
            .filter(|f| f.format == CACHE_FORMAT)
            .unwrap_or_else(|| CacheFile {
                format: CACHE_FORMAT.to_string(),
                family: ty.to_string(),
                total: degree.total,
                fermionic: degree.fermionic,
                entries: BTreeMap::new(),
            });
        file.entries
            .insert(sp.to_string(), value.to_json_terms());
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        // atomic whole-file replacement
        let tmp = path.with_extension("json.tmp");
        if serde_json::to_string(&file)
            .ok()
            .and_then(|text| std::fs::write(&tmp, text).ok())
            .is_some()
        {
            let _ = std::fs::rename(&tmp, &path);
        }
    }

    /// Expands `f` in the requested family by pairing against the dual
    /// family under the scalar product; exact reconstruction holds.
    pub fn expand(&self, f: &SuperPolynomial, ty: SchurType) -> SchurExpansion {
        let mut coeffs = BTreeMap::new();
        for (degree, component) in f.components() {
            for sp in SuperPartition::enumerate(degree.total, degree.fermionic as usize) {
                let dual = self.schur(ty.dual(), &sp);
                let c = component.scalar_product(&dual);
                if !num_traits::Zero::is_zero(&c) {
                    coeffs.insert(sp, c);
                }
            }
        }
        SchurExpansion { coeffs }
    }

    /// Rebuilds `Σ c_Λ s_Λ` from an expansion.
    pub fn reconstruct(&self, expansion: &SchurExpansion, ty: SchurType) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (sp, c) in &expansion.coeffs {
            out += self.schur(ty, sp).scale(c);
        }
        out
    }
}

/// An expansion `f = Σ_Λ c_Λ s^{(type)}_Λ` with exact coefficients, ordered
/// canonically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    pub coeffs: BTreeMap<SuperPartition, Rat>,
}

impl SchurExpansion {
    pub fn single(sp: SuperPartition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(sp, Rat::one());
        Self { coeffs }
    }

    pub fn from_signed(signed: &BTreeMap<SuperPartition, i64>) -> Self {
        Self {
            coeffs: signed
                .iter()
                .map(|(sp, &c)| (sp.clone(), rat_int(c)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lines `Λ-string<TAB>coefficient` in canonical order.
    pub fn render_lines(&self) -> String {
        self.coeffs
            .iter()
            .map(|(sp, c)| format!("{sp}\t{c}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}
