"""Serve a checkpoint: lm-bridge --model bert-large-cased --port 8400"""

from __future__ import annotations

import argparse

import uvicorn

from .app import create_app
from .scoring import load_bridge_model


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--model", required=True,
                        help="checkpoint name or local path (e.g. bert-large-cased, gpt2-xl)")
    parser.add_argument("--mode", choices=("autoregressive", "masked"), default=None,
                        help="default: inferred from the checkpoint config")
    parser.add_argument("--device", default="cpu")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8400)
    args = parser.parse_args()

    bridge = load_bridge_model(args.model, mode=args.mode, device=args.device)
    print(f"serving {bridge.model_name} ({bridge.mode}) on {args.host}:{args.port}")
    uvicorn.run(create_app(bridge), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
