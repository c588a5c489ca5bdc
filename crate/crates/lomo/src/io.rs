//! File formats: grid functions and decreasing profiles as single JSON
//! documents, with path context on every I/O error.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{LomoError, Result};
use crate::grid::{Domain, GridFunction};
use crate::rearrangement::DecreasingProfile;

/// On-disk form of a grid function: header fields plus the flat row-major
/// sample array.
#[derive(Debug, Serialize, Deserialize)]
pub struct GridFunctionFile {
    pub dim: usize,
    pub side: f64,
    /// Points per axis.
    pub n_points: usize,
    pub samples: Vec<f64>,
}

fn io_err(path: &Path, source: std::io::Error) -> LomoError {
    LomoError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn json_err(path: &Path, source: serde_json::Error) -> LomoError {
    LomoError::Json {
        path: path.display().to_string(),
        source,
    }
}

pub fn read_grid_function(path: &Path) -> Result<GridFunction> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let file: GridFunctionFile = serde_json::from_str(&text).map_err(|e| json_err(path, e))?;
    let domain = Domain::new(file.dim, file.side, file.n_points)?;
    GridFunction::new(domain, file.samples)
}

pub fn write_grid_function(path: &Path, f: &GridFunction) -> Result<()> {
    let file = GridFunctionFile {
        dim: f.domain().dim(),
        side: f.domain().side(),
        n_points: f.domain().points_per_axis(),
        samples: f.samples().to_vec(),
    };
    let text = serde_json::to_string(&file).map_err(|e| json_err(path, e))?;
    std::fs::write(path, text).map_err(|e| io_err(path, e))
}

#[derive(Debug, Serialize, Deserialize)]
struct ProfileFile {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

pub fn read_profile(path: &Path) -> Result<DecreasingProfile> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let file: ProfileFile = serde_json::from_str(&text).map_err(|e| json_err(path, e))?;
    DecreasingProfile::new(file.breakpoints, file.values)
}

pub fn write_profile(path: &Path, profile: &DecreasingProfile) -> Result<()> {
    let file = ProfileFile {
        breakpoints: profile.breakpoints().to_vec(),
        values: profile.values().to_vec(),
    };
    let text = serde_json::to_string(&file).map_err(|e| json_err(path, e))?;
    std::fs::write(path, text).map_err(|e| io_err(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| io_err(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_function_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.json");
        let domain = Domain::new(2, 2.0, 16).unwrap();
        let f = GridFunction::from_fn(domain, |x| x[0] + 2.0 * x[1]).unwrap();
        write_grid_function(&path, &f).unwrap();
        let back = read_grid_function(&path).unwrap();
        assert_eq!(back.domain(), f.domain());
        assert_eq!(back.samples(), f.samples());
    }

    #[test]
    fn profile_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.json");
        let prof = DecreasingProfile::new(vec![0.5, 1.0], vec![2.0, 1.0]).unwrap();
        write_profile(&path, &prof).unwrap();
        assert_eq!(read_profile(&path).unwrap(), prof);
    }

    #[test]
    fn read_reports_path_on_missing_file() {
        let err = read_grid_function(Path::new("/nonexistent/f.json")).unwrap_err();
        assert!(err.to_string().contains("/nonexistent/f.json"));
    }

    #[test]
    fn read_rejects_invalid_header() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(
            &path,
            r#"{"dim": 1, "side": 2.0, "n_points": 7, "samples": [0.0]}"#,
        )
        .unwrap();
        // 7 is not a power of two
        assert!(read_grid_function(&path).is_err());
    }
}
