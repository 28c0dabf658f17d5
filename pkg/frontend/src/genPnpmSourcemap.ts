/**
 * Emit a source map fixture following the pnpm store layout, whose
 * directory names embed exact package versions (and "+"-encoded scoped
 * names, optionally suffixed with a peer-dependency hash).
 */

import * as fs from 'node:fs';
import * as path from 'node:path';

export interface PnpmFixture {
  mapPath: string;
  manifestPath: string;
  groundTruth: Record<string, string>;
}

const DECLARED: Array<{ name: string; version: string; source: string }> = [
  {
    name: 'mathkit',
    version: '1.0.1',
    source: 'webpack://app/node_modules/.pnpm/mathkit@1.0.1'
      + '/node_modules/mathkit/index.js',
  },
  {
    name: 'stringbench',
    version: '2.4.0',
    source: 'webpack://app/node_modules/.pnpm/stringbench@2.4.0'
      + '/node_modules/stringbench/index.js',
  },
  {
    name: '@toy/scoped',
    version: '0.2.7',
    // scoped names encode "/" as "+" and may carry a peer hash
    source: 'webpack://app/node_modules/.pnpm/@toy+scoped@0.2.7_h4sh'
      + '/node_modules/@toy/scoped/lib/main.js',
  },
];

export function genPnpmSourcemapFixture(fixturesRoot: string): PnpmFixture {
  const outDir = path.join(fixturesRoot, 'pnpm');
  fs.mkdirSync(outDir, { recursive: true });
  const groundTruth: Record<string, string> = {};
  const sources = DECLARED.map((d) => {
    groundTruth[d.name] = d.version;
    return d.source;
  });
  sources.push('webpack://app/src/main.js');  // first-party, no package
  const map = {
    version: 3,
    file: 'bundle.js',
    sources,
    names: [],
    mappings: '',
  };
  const mapPath = path.join(outDir, 'bundle.js.map');
  fs.writeFileSync(mapPath, JSON.stringify(map, null, 2) + '\n');
  const manifestPath = path.join(outDir, 'manifest.json');
  fs.writeFileSync(manifestPath, JSON.stringify({
    schemaVersion: 1,
    map: 'pnpm/bundle.js.map',
    groundTruth,
  }, null, 2) + '\n');
  return { mapPath, manifestPath, groundTruth };
}
