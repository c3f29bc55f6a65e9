use crate::exact::CRational;

use super::{NumberType, StructureError, StructureHandle};

/// Parses `nat:n=3`, `int:j=-1`, `rat:r=3/2`, `real:r=-2/5`, `cpx:c=2+1i`.
pub fn parse_structure(text: &str) -> Result<StructureHandle<CRational>, StructureError> {
    let bad = || StructureError::InvalidLiteral(text.to_string());
    let (tag, rest) = text.trim().split_once(':').ok_or_else(bad)?;
    let number_type = NumberType::from_tag(tag).ok_or_else(bad)?;
    let (name, value) = rest.split_once('=').ok_or_else(bad)?;
    if name != number_type.scale_name() {
        return Err(bad());
    }
    let scale: CRational = value.parse().map_err(|_| bad())?;
    StructureHandle::new(number_type, scale)
}
