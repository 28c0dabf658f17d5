/**
 * Produce runtime preamble source snippets, one per supported bundler.
 * The webpack snippet is extracted from a real two-module development
 * build (so it tracks the pinned webpack version); the other bundlers
 * are not part of the pinned toolchain, so their snippets are
 * canonical reference transcriptions of the runtimes those tools emit.
 */

import * as fs from 'node:fs';
import * as path from 'node:path';
import webpack from 'webpack';
import type { Configuration } from 'webpack';

const CANONICAL: Record<string, string> = {
  'webpack-chunk': `(self["webpackChunk"] = self["webpackChunk"] || []).push([[179], {
  1: function (module, exports, require) {
    module.exports = require(2);
  },
  2: function (module, exports, require) {
    exports.a = 1;
  }
}]);
`,
  rollup: `(function (global, factory) {
  typeof exports === 'object' && typeof module !== 'undefined' ? factory(exports) :
  typeof define === 'function' && define.amd ? define(['exports'], factory) :
  (global = typeof globalThis !== 'undefined' ? globalThis : global || self, factory(global.lib = {}));
})(this, (function (exports) {
  'use strict';
  Object.defineProperty(exports, '__esModule', { value: true });
}));
`,
  browserify: `(function e(t, n, r) {
  function s(o, u) {
    if (!n[o]) {
      if (!t[o]) {
        var a = typeof require == "function" && require;
        if (!u && a) return a(o, !0);
        if (i) return i(o, !0);
        var f = new Error("Cannot find module '" + o + "'");
        throw ((f.code = "MODULE_NOT_FOUND"), f);
      }
      var l = (n[o] = { exports: {} });
      t[o][0].call(l.exports, function (e) {
        var n = t[o][1][e];
        return s(n ? n : e);
      }, l, l.exports, e, t, n, r);
    }
    return n[o].exports;
  }
  var i = typeof require == "function" && require;
  for (var o = 0; o < r.length; o++) s(r[o]);
  return s;
})
`,
  esbuild: `var __defProp = Object.defineProperty;
var __getOwnPropNames = Object.getOwnPropertyNames;
var __commonJS = (cb, mod) => function __require() {
  return mod || (0, cb[__getOwnPropNames(cb)[0]])((mod = { exports: {} }).exports, mod), mod.exports;
};
`,
  parcel: `function parcelRequire(name) {
  if (name in modules) {
    return modules[name];
  }
  if (name in cache) {
    var m = cache[name];
    delete cache[name];
    var moduleObject = { id: name, exports: {} };
    modules[name] = moduleObject.exports;
    m.call(moduleObject.exports, moduleObject, moduleObject.exports);
    modules[name] = moduleObject.exports;
    return modules[name];
  }
  var err = new Error("Cannot find module '" + name + "'");
  err.code = "MODULE_NOT_FOUND";
  throw err;
}
`,
};

function buildWebpackRuntime(buildRoot: string): Promise<string> {
  const workDir = path.join(buildRoot, 'preamble-webpack');
  fs.rmSync(workDir, { recursive: true, force: true });
  fs.mkdirSync(workDir, { recursive: true });
  // two CommonJS modules force webpack to keep its require runtime
  fs.writeFileSync(path.join(workDir, 'dep.js'), 'exports.one = 1;\n');
  fs.writeFileSync(path.join(workDir, 'entry.js'),
                   "var dep = require('./dep.js');\nconsole.log(dep.one);\n");
  const outDir = path.join(workDir, 'out');
  const config: Configuration = {
    mode: 'development',
    context: workDir,
    entry: path.join(workDir, 'entry.js'),
    target: ['web', 'es5'],
    devtool: false,
    output: { path: outDir, filename: 'runtime.js' },
    optimization: { minimize: false, runtimeChunk: false },
  };
  return new Promise((resolve, reject) => {
    webpack(config, (err, stats) => {
      if (err || !stats || stats.hasErrors()) {
        reject(err ?? new Error(stats ? stats.toString() : 'no stats'));
        return;
      }
      resolve(fs.readFileSync(path.join(outDir, 'runtime.js'), 'utf-8'));
    });
  });
}

export async function genRuntimePreambles(
    fixturesRoot: string, buildRoot: string): Promise<string[]> {
  const outDir = path.join(fixturesRoot, 'preambles');
  fs.mkdirSync(outDir, { recursive: true });
  const written: string[] = [];
  const webpackRuntime = await buildWebpackRuntime(buildRoot);
  fs.writeFileSync(path.join(outDir, 'webpack.js'), webpackRuntime);
  written.push('preambles/webpack.js');
  for (const [bundler, snippet] of Object.entries(CANONICAL)) {
    fs.writeFileSync(path.join(outDir, `${bundler}.js`), snippet);
    written.push(`preambles/${bundler}.js`);
  }
  return written.sort();
}
