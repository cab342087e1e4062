use std::fmt;
use std::fs;
use std::path::PathBuf;

/// A failure with its process exit code: 2 usage, 3 runtime, 4 I/O.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: msg.into(),
        }
    }

    pub fn code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // keep diagnostics on one line
        let one_line: Vec<&str> = self.message.lines().map(str::trim).collect();
        f.write_str(&one_line.join(" "))
    }
}

impl From<ilt_core::Error> for CliError {
    fn from(e: ilt_core::Error) -> Self {
        let code = if e.is_usage() {
            2
        } else if e.is_io() {
            4
        } else {
            3
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn io_error(path: &std::path::Path, source: std::io::Error) -> CliError {
    ilt_core::Error::Io {
        path: path.to_path_buf(),
        source,
    }
    .into()
}

/// Writes every file or none: on the first failure, files already written
/// (and the partial one) are removed.
pub fn write_all(files: &[(PathBuf, String)]) -> Result<(), CliError> {
    let mut written: Vec<&PathBuf> = Vec::new();
    for (path, contents) in files {
        let result = path
            .parent()
            .filter(|p| !p.as_os_str().is_empty())
            .map_or(Ok(()), fs::create_dir_all)
            .and_then(|()| fs::write(path, contents));
        if let Err(e) = result {
            for p in written.iter().chain(std::iter::once(&path)) {
                let _ = fs::remove_file(p);
            }
            return Err(io_error(path, e));
        }
        written.push(path);
    }
    Ok(())
}
