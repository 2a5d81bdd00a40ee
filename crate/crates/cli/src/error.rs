use serde::Serialize;
use surfcover_core::Error;

pub const USAGE: i32 = 1;
pub const INFEASIBLE: i32 = 2;
pub const INTERNAL: i32 = 3;

/// Error as written to stderr: `{"error": {"kind", "message", "exit_code"}}`.
#[derive(Debug, Clone, Serialize)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    pub fn new(kind: impl Into<String>, message: impl Into<String>, exit_code: i32) -> Self {
        Self {
            kind: kind.into(),
            message: message.into(),
            exit_code,
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new("Usage", message, USAGE)
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self }).to_string()
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::MalformedRotation(_)
        | Error::InvalidSign(_)
        | Error::VertexOutOfRange { .. }
        | Error::EdgeOutOfRange(_)
        | Error::FaceOutOfRange(_)
        | Error::MalformedTree(_)
        | Error::InvalidDrawing(_)
        | Error::InvalidCrossing { .. }
        | Error::NotACycle(_)
        | Error::NotSimple(_)
        | Error::NotAFace
        | Error::ParamRange(_)
        | Error::DuplicateCenter => USAGE,
        Error::NormalizationFailed(_) | Error::OscillationDetected(..) => INTERNAL,
        _ => INFEASIBLE,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let debug = format!("{e:?}");
        let kind: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
        Self::new(kind, e.to_string(), exit_code(&e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_and_codes() {
        let e = CliError::from(Error::DiameterExceeded {
            diameter: 4,
            radius: 1,
        });
        assert_eq!(e.kind, "DiameterExceeded");
        assert_eq!(e.exit_code, INFEASIBLE);
        assert_eq!(CliError::from(Error::Parse("x".into())).exit_code, USAGE);
        assert_eq!(
            CliError::from(Error::OscillationDetected(1, 2)).exit_code,
            INTERNAL
        );
        let json: serde_json::Value =
            serde_json::from_str(&CliError::from(Error::Disconnected).to_json()).unwrap();
        assert_eq!(json["error"]["kind"], "Disconnected");
        assert_eq!(json["error"]["exit_code"], 2);
    }
}
