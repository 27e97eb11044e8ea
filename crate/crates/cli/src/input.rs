//! Reading matrices, presentations and characters from the command line.

use std::fs;
use std::path::Path;

use alterna_core::coxeter::{validate_matrix, CoxeterMatrix, MatrixInput};
use alterna_core::presentations::GroupPresentation;
use alterna_core::subgroup_rewrite::SignCharacter;
use serde::Deserialize;

use crate::Failure;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Full(MatrixInput),
    Bare(Vec<Vec<u32>>),
}

/// A matrix from a JSON file, or a named type when no such file exists.
pub fn matrix(arg: &str) -> Result<CoxeterMatrix, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        return CoxeterMatrix::named(arg).map_err(|_| {
            Failure::Invalid(format!("`{arg}` is neither a readable file nor a known Coxeter type"))
        });
    }
    let text = read(path)?;
    let parsed: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| Failure::Invalid(format!("{arg}: expected {{\"rank\", \"matrix\"}}: {e}")))?;
    let mat = match parsed {
        MatrixFile::Full(input) => CoxeterMatrix::from_input(&input),
        MatrixFile::Bare(raw) => validate_matrix(&raw),
    };
    mat.map_err(|e| Failure::Invalid(format!("{arg}: {e}")))
}

pub fn presentation(path: &Path) -> Result<GroupPresentation, Failure> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Invalid(format!("{}: not a group presentation: {e}", path.display())))
}

pub fn character(arg: &str, pres: &GroupPresentation) -> Result<SignCharacter, Failure> {
    if arg == "all-minus" {
        return Ok(SignCharacter::all_minus(pres));
    }
    let path = Path::new(arg);
    serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Invalid(format!("{arg}: not a sign character: {e}")))
}
