/**
 * Spawns the platkit HTTP service for the test run and provides its base
 * URL to the workers; the suite exercises the real wire formats, not mocks.
 */

import { ChildProcess, spawn } from "node:child_process";
import { Socket } from "node:net";
import type { TestProject } from "vitest/node";

let proc: ChildProcess | undefined;

function portOpen(port: number): Promise<boolean> {
  return new Promise((resolve) => {
    const socket = new Socket();
    socket.setTimeout(500);
    socket.once("connect", () => {
      socket.destroy();
      resolve(true);
    });
    const fail = () => {
      socket.destroy();
      resolve(false);
    };
    socket.once("timeout", fail);
    socket.once("error", fail);
    socket.connect(port, "127.0.0.1");
  });
}

export default async function setup(project: TestProject): Promise<void> {
  const port = 8700 + Math.floor(Math.random() * 800);
  const baseUrl = `http://127.0.0.1:${port}`;
  proc = spawn("python3", ["-m", "platkit.cli", "serve", "--port", String(port)], {
    stdio: "ignore",
  });
  proc.unref(); // the child must not keep the runner's event loop alive
  const deadline = Date.now() + 30_000;
  while (!(await portOpen(port))) {
    if (Date.now() > deadline) {
      proc.kill();
      throw new Error("platkit service did not come up within 30s");
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  project.provide("baseUrl", baseUrl);
}

export async function teardown(): Promise<void> {
  proc?.kill();
}

declare module "vitest" {
  export interface ProvidedContext {
    baseUrl: string;
  }
}
