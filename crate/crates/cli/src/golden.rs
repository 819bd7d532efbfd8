//! Golden presentation files: rebuilt on every `verify` run and compared
//! byte for byte with the stored copy.

use std::path::{Path, PathBuf};

use peterson::peterson::build_yp;
use peterson::rootdata::RootDatum;
use peterson::verify::{case_label, Check, Suite};

pub struct Golden {
    pub file: &'static str,
    pub lie_type: &'static str,
    pub rank: usize,
    pub excluded: &'static [usize],
    pub equivariant: bool,
}

pub const GOLDEN: [Golden; 3] = [
    Golden { file: "A1_borel_equivariant.json", lie_type: "A", rank: 1, excluded: &[0], equivariant: true },
    Golden { file: "A2_borel.json", lie_type: "A", rank: 2, excluded: &[0, 1], equivariant: false },
    Golden { file: "A2_levi2_equivariant.json", lie_type: "A", rank: 2, excluded: &[0], equivariant: true },
];

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

pub fn render(g: &Golden) -> anyhow::Result<String> {
    let d = RootDatum::parse(g.lie_type, g.rank)?;
    let p = d.parabolic(g.excluded)?;
    Ok(build_yp(&d, &p, g.equivariant)?.to_json_string() + "\n")
}

pub fn check_all(dir: &Path) -> anyhow::Result<Vec<Check>> {
    let mut out = Vec::new();
    for g in &GOLDEN {
        let d = RootDatum::parse(g.lie_type, g.rank)?;
        let p = d.parabolic(g.excluded)?;
        let path = dir.join(g.file);
        let fresh = render(g)?;
        let (passed, detail) = match std::fs::read_to_string(&path) {
            Ok(stored) if stored == fresh => (true, format!("{} matches", g.file)),
            Ok(_) => (false, format!("{} differs from the rebuilt presentation", g.file)),
            Err(e) => (false, format!("cannot read {}: {e}", path.display())),
        };
        out.push(Check {
            suite: Suite::GoldenSl2,
            case: case_label(&d, &p),
            anchor: "stored presentation equals the rebuilt one".into(),
            passed,
            detail,
        });
    }
    Ok(out)
}
