pub mod bb;
pub mod oracle;
pub mod run;
pub mod verify_z;

use std::path::Path;

/// Reads a UTF-8 text file, mapping failures to a printable message.
pub fn read_text(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}
