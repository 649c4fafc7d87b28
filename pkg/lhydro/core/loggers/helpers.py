import numpy as np


def json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    elif isinstance(obj, np.floating):
        return float(obj)
    elif isinstance(obj, np.ndarray):
        return obj.tolist()
    else:
        return None


def event_row(event):
    """Flat mapping of a diagnostics event, in diagnostics.csv column order."""
    diagnostics = event["diagnostics"]
    px, py, pz = diagnostics.momentum
    return {
        "step": event["step"],
        "t": event["t"],
        "kinetic_energy": diagnostics.kinetic_energy,
        "divergence_norm": diagnostics.divergence_norm,
        "enstrophy": diagnostics.enstrophy,
        "px": px,
        "py": py,
        "pz": pz,
    }
