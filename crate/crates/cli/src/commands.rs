use homlie_core::cohom::cohomology;
use homlie_core::derived::{derivation_algebra, out_algebra};
use homlie_core::exactla::{vector, Matrix};
use homlie_core::extend::{
    build_extension, classify, isomorphic, obstruction, transport, OutMorphism,
};
use homlie_core::homlie::HomLieAlgebra;
use homlie_core::sample::{self, DataSampler};
use homlie_core::{Error, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::input::Loader;
use crate::output;
use crate::{CliError, Command, Outcome};

type CmdResult = Result<Outcome, CliError>;

fn yes(result: Value) -> CmdResult {
    Ok(Outcome { affirmative: true, result })
}

pub fn dispatch(command: &Command, loader: &mut Loader) -> CmdResult {
    match command {
        Command::Validate { algebra } => validate(&loader.algebra_ref(None, algebra)?),
        Command::Der { algebra } => der(&loader.algebra_ref(None, algebra)?),
        Command::Out { algebra } => out(&loader.algebra_ref(None, algebra)?),
        Command::Center { algebra } => center(&loader.algebra_ref(None, algebra)?),
        Command::Cohomology {
            algebra,
            representation,
            degree,
        } => cohomology_cmd(loader, algebra, representation, *degree),
        Command::Obstruction { algebra, morphism } => obstruction_cmd(loader, algebra, morphism),
        Command::Classify { algebra, morphism, out } => classify_cmd(loader, algebra, morphism, out.as_deref()),
        Command::Iso { first, second } => iso(loader, first, second),
        Command::Build { extension } => build(loader, extension),
        Command::Extract { raw } => extract(loader, raw),
        Command::Selfcheck { seed } => selfcheck(*seed),
    }
}

fn validate(g: &HomLieAlgebra<Q>) -> CmdResult {
    let report = g.validate();
    Ok(Outcome {
        affirmative: report.is_valid(),
        result: json!({
            "algebra": g.name(),
            "dim": g.dim(),
            "valid": report.is_valid(),
            "witnesses": report.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    })
}

fn der(g: &HomLieAlgebra<Q>) -> CmdResult {
    let d = derivation_algebra(g)?;
    let o = out_algebra(&d)?;
    let cen = g.center()?;
    yes(json!({
        "algebra": g.name(),
        "der": {"dim": d.der().dim(), "basis": output::matrices(&d.basis_matrices())},
        "inn": {"dim": d.inn().dim(), "basis": output::matrices(&d.inn_matrices())},
        "out": {"dim": o.dim()},
        "center": {"dim": cen.dim()},
    }))
}

fn out(g: &HomLieAlgebra<Q>) -> CmdResult {
    let o = out_algebra(&derivation_algebra(g)?)?;
    let reps: Vec<Matrix<Q>> = (0..o.dim()).map(|i| o.representative(&vector::unit(o.dim(), i))).collect();
    yes(json!({
        "algebra": g.name(),
        "dim": o.dim(),
        "representatives": output::matrices(&reps),
        "structure": output::algebra(o.algebra()),
    }))
}

fn center(g: &HomLieAlgebra<Q>) -> CmdResult {
    g.ensure_valid()?;
    let cen = g.center()?;
    yes(json!({"algebra": g.name(), "dim": cen.dim(), "basis": output::basis(&cen)}))
}

fn same_algebra(a: &HomLieAlgebra<Q>, b: &HomLieAlgebra<Q>) -> bool {
    a.dim() == b.dim() && a.structure() == b.structure() && a.twist() == b.twist()
}

fn cohomology_cmd(loader: &mut Loader, algebra: &str, rep_path: &str, degree: usize) -> CmdResult {
    let g = loader.algebra_ref(None, algebra)?;
    g.ensure_valid()?;
    let (declared, parts) = loader.representation(rep_path)?;
    if let Some(h) = declared {
        if !same_algebra(&h, &g) {
            return Err(CliError::Usage(format!("{rep_path} is a representation of a different algebra")));
        }
    }
    let rep = parts.into_representation(g)?;
    rep.ensure_valid()?;
    let h = cohomology(&rep, degree)?;
    yes(json!({
        "degree": degree,
        "dims": {
            "cochains": h.cochains().dim(),
            "cocycles": h.cocycles().dim(),
            "coboundaries": h.coboundaries().dim(),
            "cohomology": h.dim(),
        },
        "representatives": h.representatives().iter().map(output::cochain).collect::<Vec<_>>(),
    }))
}

/// Reads `g` and a morphism file; `Err(Ok(outcome))` is a negative answer
/// (the images do not define a morphism).
fn morphism(loader: &mut Loader, algebra: &str, path: &str) -> Result<Result<OutMorphism<Q>, Outcome>, CliError> {
    let g = loader.algebra_ref(None, algebra)?;
    g.ensure_valid()?;
    let (h, images, _) = loader.morphism(path)?;
    let out = out_algebra(&derivation_algebra(&h)?)?;
    if images.len() != g.dim() || images.iter().any(|v| v.len() != out.dim()) {
        return Err(CliError::Usage(format!(
            "{path}: expected {} image vectors of length dim Out(h) = {}",
            g.dim(),
            out.dim()
        )));
    }
    let m = Matrix::from_fn(out.dim(), g.dim(), |r, c| images[c][r].clone());
    match OutMorphism::new(g, out, m) {
        Ok(rbar) => Ok(Ok(rbar)),
        Err(Error::Precondition(msg)) => Ok(Err(Outcome {
            affirmative: false,
            result: json!({"morphism": false, "witness": msg}),
        })),
        Err(e) => Err(e.into()),
    }
}

fn obstruction_cmd(loader: &mut Loader, algebra: &str, path: &str) -> CmdResult {
    let rbar = match morphism(loader, algebra, path)? {
        Ok(r) => r,
        Err(negative) => return Ok(negative),
    };
    let obs = obstruction(&rbar)?;
    Ok(Outcome {
        affirmative: obs.class_is_zero(),
        result: json!({
            "extensible": obs.class_is_zero(),
            "class": output::vector(obs.class()),
            "h3_dim": obs.cohomology().dim(),
            "lift": {"rho": output::matrices(obs.rho()), "omega": output::cochain(obs.omega())},
            "center_representation": output::representation(obs.rep_center()),
            "three_cocycle": output::cochain(obs.three_cocycle()),
            "sigma": obs.witness_sigma().map_or(Value::Null, output::cochain),
            "repaired": obs.repaired().map_or(Value::Null, output::extension_file),
        }),
    })
}

fn classify_cmd(loader: &mut Loader, algebra: &str, path: &str, out_dir: Option<&str>) -> CmdResult {
    let rbar = match morphism(loader, algebra, path)? {
        Ok(r) => r,
        Err(negative) => return Ok(negative),
    };
    let c = classify(&rbar)?;
    let mut files = vec![("class_0.json".to_string(), output::extension_file(c.base()))];
    let mut classes = Vec::new();
    for k in 0..c.dim() {
        let coords = vector::unit::<Q>(c.dim(), k);
        let d = c.datum(&coords)?;
        let name = format!("class_{}.json", k + 1);
        classes.push(json!({"coordinates": output::vector(&coords), "file": name, "datum": output::extension_file(&d)}));
        files.push((name, output::extension_file(&d)));
    }
    let mut written = Vec::new();
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("cannot create {dir}: {e}")))?;
        for (name, v) in &files {
            let p = std::path::Path::new(dir).join(name);
            std::fs::write(&p, output::to_json(v)).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))?;
            written.push(name.clone());
        }
    }
    yes(json!({
        "h2_dim": c.dim(),
        "base": {"file": "class_0.json", "datum": output::extension_file(c.base())},
        "classes": classes,
        "written": written,
    }))
}

fn iso(loader: &mut Loader, first: &str, second: &str) -> CmdResult {
    let d1 = loader.extension(first)?;
    let d2 = loader.extension(second)?;
    let xi = isomorphic(&d1, &d2)?;
    Ok(Outcome {
        affirmative: xi.is_some(),
        result: json!({"isomorphic": xi.is_some(), "xi": xi.as_ref().map_or(Value::Null, output::matrix)}),
    })
}

fn build(loader: &mut Loader, path: &str) -> CmdResult {
    let d = loader.extension(path)?;
    let ext = build_extension(&d)?;
    yes(json!({
        "total": output::algebra(ext.total()),
        "iota": output::matrix(ext.iota()),
        "p": output::matrix(ext.p()),
        "section": output::matrix(ext.section()),
    }))
}

fn extract(loader: &mut Loader, path: &str) -> CmdResult {
    let (raw, section) = loader.raw_extension(path)?;
    let (d, s) = raw.extract(section.as_ref())?;
    yes(json!({"section": output::matrix(&s), "datum": output::extension_file(&d)}))
}

const SELFCHECK_PAIRS: &[(&str, &str)] = &[
    ("abelian_1", "heisenberg3_236"),
    ("abelian_2", "heisenberg3"),
    ("aff1_2", "aff1_1"),
    ("abelian_2", "sl2"),
    ("heisenberg3_236", "abelian_1"),
];

fn selfcheck(seed: u64) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dd = 0;
    for _ in 0..25 {
        let (_, rep) = sample::hom_lie_with_rep::<Q, _>(&mut rng, 4);
        let k = rng.gen_range(1..=2);
        let f = sample::cochain(&mut rng, &rep, k)?;
        if rep.coboundary(&rep.coboundary(&f)?)?.is_zero() {
            dd += 1;
        }
    }
    let samplers = SELFCHECK_PAIRS
        .iter()
        .map(|(g, h)| {
            let fx = |n: &str| homlie_core::homlie::fixture::<Q>(n).expect("built-in fixture");
            DataSampler::new(&fx(g), &fx(h))
        })
        .collect::<homlie_core::Result<Vec<_>>>()?;
    let (mut round_trips, mut transports) = (0, 0);
    for _ in 0..10 {
        let s = &samplers[rng.gen_range(0..samplers.len())];
        let d = s.valid(&mut rng)?;
        let ext = build_extension(&d)?;
        if ext.raw().extract(Some(ext.section()))?.0 == d {
            round_trips += 1;
        }
        let xi_space = sample::equivariant_maps(s.g(), s.h());
        let xi = Matrix::from_vec(s.h().dim(), s.g().dim(), sample::combination(&mut rng, &xi_space))?;
        if isomorphic(&d, &transport(&d, &xi)?)?.is_some() {
            transports += 1;
        }
    }
    let ok = dd == 25 && round_trips == 10 && transports == 10;
    Ok(Outcome {
        affirmative: ok,
        result: json!({
            "seed": seed,
            "passed": ok,
            "checks": {
                "coboundary_squared_zero": {"samples": 25, "passed": dd},
                "build_extract_round_trip": {"samples": 10, "passed": round_trips},
                "transport_isomorphic": {"samples": 10, "passed": transports},
            },
        }),
    })
}
