use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use nijenhuis_core::algebra::{banded_oscillator_algebra, dual_numbers, full_matrix_algebra, m2_iabc_algebra, upper_triangular_algebra};
use nijenhuis_core::dynamics::{derivation_witness, example_check, inner_generator, is_bi_hamiltonian, ExampleOptions};
use nijenhuis_core::hochschild::cohomology_dimension;
use nijenhuis_core::nijenhuis::*;
use nijenhuis_core::{Algebra, Associativity, Check, Cochain, Element, Operator, Product};
use serde::de::DeserializeOwned;
use sha2::{Digest, Sha256};

use crate::args::{AlgebraOperator, AlgebraSplit, Builtin, Command};
use crate::docs::{structure_entries, AlgebraDoc, DecompositionDoc, OperatorDoc};
use crate::{CliError, Report};

pub enum Output {
    Report(Report),
    Document(String),
}

/// Reads input documents and remembers their digests.
#[derive(Default)]
struct Inputs {
    digests: BTreeMap<String, String>,
}

impl Inputs {
    fn read<T: DeserializeOwned>(&mut self, key: &str, path: &Path) -> Result<T, CliError> {
        let shown = path.display().to_string();
        let bytes = fs::read(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
        self.digests.insert(key.to_string(), hex::encode(Sha256::digest(&bytes)));
        serde_json::from_slice(&bytes).map_err(|source| CliError::Json { path: shown, source })
    }

    fn algebra(&mut self, path: &Path) -> Result<Algebra, CliError> {
        self.read::<AlgebraDoc>("algebra", path)?.to_algebra()
    }

    fn operator(&mut self, key: &str, path: &Path, alg: &Algebra) -> Result<Operator, CliError> {
        self.read::<OperatorDoc>(key, path)?.to_operator(alg)
    }

    fn product(&mut self, key: &str, path: &Path) -> Result<Product, CliError> {
        self.read::<AlgebraDoc>(key, path)?.to_product()
    }

    fn algebra_operator(&mut self, io: &AlgebraOperator) -> Result<(Algebra, Operator), CliError> {
        let alg = self.algebra(&io.algebra)?;
        let n = self.operator("operator", &io.operator, &alg)?;
        Ok((alg, n))
    }

    fn split(&mut self, split: &AlgebraSplit) -> Result<(Algebra, nijenhuis_core::Decomposition), CliError> {
        let alg = self.algebra(&split.algebra)?;
        let dec = self.read::<DecompositionDoc>("decomposition", &split.decomposition)?.to_decomposition(&alg)?;
        Ok((alg, dec))
    }

    fn report(self, command: &str) -> Report {
        let mut r = Report::new(command);
        r.inputs = self.digests;
        r
    }
}

fn pair(w: Option<[usize; 2]>) -> Option<Vec<usize>> {
    w.map(|w| w.to_vec())
}

fn triple(w: Option<[usize; 3]>) -> Option<Vec<usize>> {
    w.map(|w| w.to_vec())
}

fn associativity_check(name: &str, p: &Product) -> Check {
    match p.associativity() {
        Associativity::NonAssociative(w) => Check::from_witness(name, Some(w.to_vec())),
        Associativity::Associative => Check::from_witness(name, None),
        Associativity::Unknown => Check::from_bool(name, false),
    }
}

fn same_dim(a: &Product, b: &Product) -> Result<(), CliError> {
    if a.dim() != b.dim() {
        return Err(nijenhuis_core::Error::DimensionMismatch { expected: a.dim(), found: b.dim() }.into());
    }
    Ok(())
}

fn coords(x: &Element) -> Vec<String> {
    x.to_dense().iter().map(ToString::to_string).collect()
}

fn product_doc(alg: &Algebra, name: &str, p: &Product) -> AlgebraDoc {
    AlgebraDoc::from_product(name, alg.basis_labels(), p)
}

fn difference(a: &Cochain, b: &Cochain) -> Option<Vec<usize>> {
    a.sub(b).first_nonzero()
}

fn builtin(name: Builtin, size: Option<usize>) -> Result<Algebra, CliError> {
    Ok(match name {
        Builtin::Matrix => full_matrix_algebra(size.unwrap_or(2))?,
        Builtin::UpperTriangular => upper_triangular_algebra(size.unwrap_or(3))?,
        Builtin::DualNumbers => dual_numbers(),
        Builtin::Pauli => m2_iabc_algebra(),
        Builtin::Oscillator => banded_oscillator_algebra(size.unwrap_or(4), 1)?.algebra,
    })
}

pub fn execute(command: Command) -> Result<Output, CliError> {
    let mut inputs = Inputs::default();
    let report = match command {
        Command::CheckNijenhuis(io) => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let p = deform(&alg, &n)?;
            let mut r = inputs.report("check-nijenhuis");
            r.check(Check::from_witness("torsion_zero", pair(torsion_witness(&alg, &n)?)));
            r.check(associativity_check("deformed_associative", &p));
            // vacuous for non-unital algebras
            let moved = alg.unit().and_then(|u| {
                let image = n.apply(u);
                (0..alg.dim()).find(|&i| image.coord(i) != u.coord(i)).map(|i| vec![i])
            });
            r.check(Check::from_witness("unit_preserved", moved));
            r.output("unital", alg.unit().is_some());
            r
        }
        Command::Torsion(io) => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let t = torsion(&alg, &n)?;
            let mut r = inputs.report("torsion");
            r.check(Check::from_witness("torsion_zero", t.first_nonzero()));
            r.output("torsion", structure_entries(&t));
            r
        }
        Command::Deform { io, name, out } => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let p = deform(&alg, &n)?;
            let name = name.unwrap_or_else(|| format!("{}_N", alg.name()));
            let doc = product_doc(&alg, &name, &p);
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n";
                fs::write(&path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            }
            let mut r = inputs.report("deform");
            r.output("product", doc);
            r
        }
        Command::Criterion(io) => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let c = associativity_criterion(&alg, &n)?;
            let mut r = inputs.report("criterion");
            r.check(Check::from_bool("μ_N is associative iff T_N is a Hochschild 2-cocycle", c.agrees()));
            r.output("deformed_associative", c.deformed_associative)
                .output("torsion_is_2cocycle", c.torsion_is_2cocycle)
                .output("associator_witness", c.associator_witness)
                .output("cocycle_witness", c.cocycle_witness);
            r
        }
        Command::Compat { product1, product2 } => {
            let p1 = inputs.product("product1", &product1)?;
            let p2 = inputs.product("product2", &product2)?;
            same_dim(&p1, &p2)?;
            let mut r = inputs.report("compat");
            r.check(Check::from_witness("mixed associator vanishes", triple(mixed_associator_witness(&p1, &p2)?)));
            r.output("product1_associative", p1.is_associative()).output("product2_associative", p2.is_associative());
            r
        }
        Command::TensorsCompat { algebra, operator1, operator2 } => {
            let alg = inputs.algebra(&algebra)?;
            let n1 = inputs.operator("operator1", &operator1, &alg)?;
            let n2 = inputs.operator("operator2", &operator2, &alg)?;
            let w = compatibility_witness(&alg, &n1, &n2)?;
            let mut r = inputs.report("tensors-compat");
            r.check(Check::from_witness("N1 and N2 are compatible", pair(w)));
            r.output("sum_is_nijenhuis", is_nijenhuis(&alg, &n1.add(&n2))?);
            r
        }
        Command::Hierarchy { io, max_power } => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let h = verify_hierarchy(&alg, &n, max_power)?;
            let mut r = inputs.report("hierarchy");
            for c in h.checks {
                r.check(c);
            }
            r.output("max_power", h.max_power);
            r
        }
        Command::Projection { split, l1, l2 } => {
            let (alg, dec) = inputs.split(&split)?;
            let n = projection_tensor(&dec, &l1, &l2)?;
            let p = deform(&alg, &n)?;
            let mut r = inputs.report("projection");
            r.check(Check::from_witness("λ1P1 + λ2P2 is a Nijenhuis tensor", pair(torsion_witness(&alg, &n)?)));
            r.output("operator", OperatorDoc::from_operator(&alg, &n))
                .output("product", product_doc(&alg, &format!("{}_projection", alg.name()), &p));
            r
        }
        Command::Contraction(split) => {
            let (alg, dec) = inputs.split(&split)?;
            let p = contraction_product(&alg, &dec)?;
            let limit = contraction_limit(&alg, &dec)?;
            let mut r = inputs.report("contraction");
            r.check(Check::from_witness(
                "the h → 0 limit of the conjugated product is the contraction product",
                difference(&limit, p.cochain()),
            ));
            r.output("product", product_doc(&alg, &format!("{}_contraction", alg.name()), &p));
            r
        }
        Command::Theorem5 { split, circ1, n1, n1p, n2 } => {
            let (alg, dec) = inputs.split(&split)?;
            let circ1 = inputs.read::<AlgebraDoc>("circ1", &circ1)?.cochain()?;
            let n1 = inputs.operator("n1", &n1, &alg)?;
            let n1p = inputs.operator("n1p", &n1p, &alg)?;
            let n2 = inputs.operator("n2", &n2, &alg)?;
            let p = theorem5_product(&alg, &dec, &circ1, &n1, &n1p, &n2)?;
            let mut r = inputs.report("theorem5");
            r.check(associativity_check("the assembled product is associative", &p));
            r.output("product", product_doc(&alg, &format!("{}_assembled", alg.name()), &p));
            r
        }
        Command::Extend { split, operator } => {
            let (alg, dec) = inputs.split(&split)?;
            let n1 = inputs.operator("operator", &operator, &alg)?;
            let ext = extend_tensor(&alg, &dec, &n1)?;
            let names = ["N1²((A2B2)1) = 0", "N1((N1(A1)B2)1 − N1((A1B2)1)) = 0", "N1((A2N1(B1))1 − N1((A2B1)1)) = 0"];
            let mut r = inputs.report("extend");
            for (name, w) in names.iter().zip(ext.witnesses) {
                r.check(Check::from_witness(*name, pair(w)));
            }
            r.check(Check::from_witness("N(A) = N1(A1) is a Nijenhuis tensor", pair(torsion_witness(&alg, &ext.operator)?)));
            r.output("operator", OperatorDoc::from_operator(&alg, &ext.operator));
            r
        }
        Command::LieCheck(io) => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let p = deform_unchecked(&alg, &n)?;
            let mut r = inputs.report("lie-check");
            r.check(Check::from_witness(
                "A∘_N B − B∘_N A = [N(A),B] + [A,N(B)] − N[A,B]",
                difference(&lie_bracket_of(&p), &lie_deformed_bracket(&alg, &n)?),
            ));
            r.check(Check::from_witness("N([A,B]_N) = [N(A),N(B)]", pair(lie_nijenhuis_witness(&alg, &n)?)));
            r
        }
        Command::Cohomology { algebra, degree } => {
            let alg = inputs.algebra(&algebra)?;
            let dim = cohomology_dimension(&alg, degree as usize)?;
            let mut r = inputs.report("cohomology");
            r.output("degree", degree).output("dimension", dim);
            r
        }
        Command::DerivationCheck { io, product } => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let p = match product {
                Some(path) => inputs.product("product", &path)?,
                None => Product::of_algebra(&alg),
            };
            let mut r = inputs.report("derivation-check");
            r.check(Check::from_witness("D(A∘B) = D(A)∘B + A∘D(B)", pair(derivation_witness(&n, &p)?)));
            r
        }
        Command::InnerGenerator { io, product } => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let p = match product {
                Some(path) => inputs.product("product", &path)?,
                None => Product::of_algebra(&alg),
            };
            let g = inner_generator(&n, &p)?;
            let mut r = inputs.report("inner-generator");
            r.check(Check::from_witness("D(A∘B) = D(A)∘B + A∘D(B)", pair(g.witness)));
            r.check(Check::from_bool("D = h∘· − ·∘h for some h", g.generator.is_some()));
            r.output("generator", g.generator.as_ref().map(coords))
                .output("center", g.generator_ambiguity.iter().map(coords).collect::<Vec<_>>());
            r
        }
        Command::Bihamiltonian { io, product1, product2 } => {
            let (alg, n) = inputs.algebra_operator(&io)?;
            let p1 = match product1 {
                Some(path) => inputs.product("product1", &path)?,
                None => Product::of_algebra(&alg),
            };
            let p2 = inputs.product("product2", &product2)?;
            same_dim(&p1, &p2)?;
            let b = is_bi_hamiltonian(&n, &p1, &p2)?;
            let mut r = inputs.report("bihamiltonian");
            r.check(Check::from_bool("D is inner for both products", b.inner_wrt_both));
            r.check(Check::from_witness("the sum of the commutator brackets satisfies Jacobi", triple(b.jacobi_witness)));
            r.check(Check::from_witness("the products are compatible", triple(b.compatibility_witness)));
            r.output("weak", b.weak)
                .output("strong", b.strong)
                .output("generators", [b.generators.0.as_ref().map(coords), b.generators.1.as_ref().map(coords)]);
            r
        }
        Command::Example { id, dim, lambda } => {
            let checks = example_check(id, &ExampleOptions { dim, lambda: lambda.clone() })?;
            let mut r = inputs.report("example");
            for c in checks {
                r.check(c);
            }
            r.output("id", id).output("dim", dim).output("lambda", lambda.map(|l| l.to_string()));
            r
        }
        Command::Builtin { name, size } => {
            let doc = AlgebraDoc::from_algebra(&builtin(name, size)?);
            return Ok(Output::Document(serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"));
        }
    };
    Ok(Output::Report(report))
}
