//! Evidence that a module is the projective cover of a simple: Hom into
//! the simples is one-dimensional exactly at that simple, and Ext^1 into
//! every simple vanishes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::modcat::{ExtSpace, HomSpace, Module, ModuleMorphism};

#[derive(Clone, Debug)]
pub struct CoverCertificate<F: Field> {
    /// Vertex of the simple being covered.
    pub vertex: usize,
    pub label: String,
    pub module: Module<F>,
    pub epi: ModuleMorphism<F>,
    /// `dim Hom(P, S_w)` for every vertex `w`.
    pub hom_table: Vec<usize>,
    /// `dim Ext^1(P, S_w)` for every vertex `w`.
    pub ext_table: Vec<usize>,
}

/// Serializable view of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateSummary {
    pub simple: String,
    pub dims: Vec<usize>,
    pub length: usize,
    pub hom_table: Vec<usize>,
    pub ext_table: Vec<usize>,
}

impl<F: Field> CoverCertificate<F> {
    /// Computes the tables and the epimorphism onto `S_vertex`, then verifies.
    pub fn new(module: Module<F>, vertex: usize) -> Result<Self> {
        let alg = module.algebra().clone();
        let label = alg.vertex_label(vertex).to_string();
        let simples = crate::modcat::simples(&alg);
        let mut hom_table = Vec::with_capacity(simples.len());
        let mut ext_table = Vec::with_capacity(simples.len());
        let mut epi = None;
        for (w, s) in simples.iter().enumerate() {
            let hom = HomSpace::new(&module, s)?;
            hom_table.push(hom.dim());
            if w == vertex && hom.dim() == 1 {
                epi = Some(hom.basis[0].clone());
            }
            ext_table.push(ExtSpace::new(&module, s)?.dim());
        }
        let epi = epi.unwrap_or_else(|| ModuleMorphism::zero(&module, &simples[vertex]));
        let cert = CoverCertificate { vertex, label, module, epi, hom_table, ext_table };
        cert.verify()?;
        Ok(cert)
    }

    /// Checks the tables against the definition and that `epi` is onto.
    pub fn verify(&self) -> Result<()> {
        let bad = |why: String| Err(Error::CertificateInvalid(format!("{why}; certificate: {}", self.to_json())));
        for (w, &h) in self.hom_table.iter().enumerate() {
            let want = usize::from(w == self.vertex);
            if h != want {
                return bad(format!("dim Hom(P, S_{}) = {h}, expected {want}", self.module.algebra().vertex_label(w)));
            }
        }
        if let Some(w) = self.ext_table.iter().position(|&e| e != 0) {
            return bad(format!("Ext^1(P, S_{}) is nonzero", self.module.algebra().vertex_label(w)));
        }
        if !self.epi.is_homomorphism() || !self.epi.is_surjective() {
            return bad("the map onto the simple is not an epimorphism".into());
        }
        Ok(())
    }

    pub fn summary(&self) -> CertificateSummary {
        CertificateSummary {
            simple: self.label.clone(),
            dims: self.module.dims().to_vec(),
            length: crate::modcat::length(&self.module),
            hom_table: self.hom_table.clone(),
            ext_table: self.ext_table.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.summary()).expect("summary serializes")
    }
}
