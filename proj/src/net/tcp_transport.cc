// Copyright 2026 The CTI-MHE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cti/net/tcp_transport.h"

#include <sys/socket.h>

#include <atomic>
#include <boost/asio.hpp>
#include <list>
#include <mutex>
#include <thread>

#include "cti/common/error.h"

namespace cti::net {

namespace asio = boost::asio;
using asio::ip::tcp;

HostPort ParseHostPort(const std::string& addr) {
  const size_t colon = addr.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == addr.size()) {
    throw Error(ErrorCode::kInvalidArgument, "address '" + addr + "' is not host:port");
  }
  HostPort hp;
  hp.host = addr.substr(0, colon);
  int port = 0;
  try {
    size_t used = 0;
    port = std::stoi(addr.substr(colon + 1), &used);
    if (used != addr.size() - colon - 1) port = -1;
  } catch (const std::exception&) {
    port = -1;
  }
  if (port < 0 || port > 65535) {
    throw Error(ErrorCode::kInvalidArgument, "bad port in '" + addr + "'");
  }
  hp.port = static_cast<uint16_t>(port);
  return hp;
}

struct TcpTransport::Impl {
  uint32_t self;
  Meter* meter;
  std::chrono::milliseconds connect_timeout;
  asio::io_context io;
  tcp::acceptor acceptor{io};
  Mailbox box;
  std::atomic<bool> stopping{false};
  std::thread accept_thread;

  std::mutex mu;  // guards peers, outbound, inbound, readers
  std::map<uint32_t, HostPort> peers;
  std::map<uint32_t, std::shared_ptr<tcp::socket>> outbound;
  std::map<uint32_t, std::unique_ptr<std::mutex>> send_mu;
  std::list<std::shared_ptr<tcp::socket>> inbound;
  std::list<std::thread> readers;

  void AcceptLoop() {
    while (!stopping) {
      auto sock = std::make_shared<tcp::socket>(io);
      boost::system::error_code ec;
      acceptor.accept(*sock, ec);
      if (ec) {
        if (stopping) return;
        continue;
      }
      sock->set_option(tcp::no_delay(true), ec);
      std::lock_guard<std::mutex> lock(mu);
      if (stopping) return;
      inbound.push_back(sock);
      readers.emplace_back([this, sock] { ReadLoop(sock); });
    }
  }

  void ReadLoop(std::shared_ptr<tcp::socket> sock) {
    try {
      while (!stopping) {
        Frame f = ReadFrame([&](uint8_t* dst, size_t n) {
          asio::read(*sock, asio::buffer(dst, n));
        });
        box.Push(std::move(f));
      }
    } catch (const std::exception&) {
      // Peer closed or sent garbage: drop the connection.
    }
  }

  std::shared_ptr<tcp::socket> Connect(uint32_t to) {
    HostPort hp;
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = outbound.find(to);
      if (it != outbound.end()) return it->second;
      auto p = peers.find(to);
      if (p == peers.end()) {
        throw Error(ErrorCode::kInvalidArgument, "unknown peer " + std::to_string(to));
      }
      hp = p->second;
    }
    const auto deadline = Clock::now() + connect_timeout;
    tcp::resolver resolver(io);
    while (true) {
      boost::system::error_code ec;
      auto eps = resolver.resolve(hp.host, std::to_string(hp.port), ec);
      auto sock = std::make_shared<tcp::socket>(io);
      if (!ec) asio::connect(*sock, eps, ec);
      if (!ec) {
        sock->set_option(tcp::no_delay(true), ec);
        std::lock_guard<std::mutex> lock(mu);
        auto [it, inserted] = outbound.emplace(to, sock);
        send_mu.try_emplace(to, std::make_unique<std::mutex>());
        return it->second;
      }
      if (stopping || Clock::now() >= deadline) {
        throw Error(ErrorCode::kTimeout, "cannot connect to peer " + std::to_string(to) +
                                             ": " + ec.message());
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
  }
};

TcpTransport::TcpTransport(uint32_t self, const std::string& listen_addr, Meter* meter,
                           std::chrono::milliseconds connect_timeout)
    : impl_(std::make_unique<Impl>()) {
  impl_->self = self;
  impl_->meter = meter;
  impl_->connect_timeout = connect_timeout;
  const HostPort hp = ParseHostPort(listen_addr);
  try {
    tcp::endpoint ep(asio::ip::make_address(hp.host == "localhost" ? "127.0.0.1" : hp.host),
                     hp.port);
    impl_->acceptor.open(ep.protocol());
    impl_->acceptor.set_option(tcp::acceptor::reuse_address(true));
    impl_->acceptor.bind(ep);
    impl_->acceptor.listen();
  } catch (const boost::system::system_error& e) {
    throw Error(ErrorCode::kIo, "listen on " + listen_addr + ": " + e.what());
  }
  impl_->accept_thread = std::thread([this] { impl_->AcceptLoop(); });
}

TcpTransport::~TcpTransport() { Shutdown(); }

uint16_t TcpTransport::port() const { return impl_->acceptor.local_endpoint().port(); }

void TcpTransport::SetPeer(uint32_t id, const std::string& addr) {
  HostPort hp = ParseHostPort(addr);
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->peers[id] = hp;
}

void TcpTransport::Shutdown() {
  if (impl_->stopping.exchange(true)) return;
  // shutdown(2) unblocks accept() and read() in the worker threads.
  ::shutdown(impl_->acceptor.native_handle(), SHUT_RDWR);
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    for (auto& s : impl_->inbound) ::shutdown(s->native_handle(), SHUT_RDWR);
    for (auto& [id, s] : impl_->outbound) ::shutdown(s->native_handle(), SHUT_RDWR);
  }
  if (impl_->accept_thread.joinable()) impl_->accept_thread.join();
  std::list<std::thread> readers;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    readers.swap(impl_->readers);
  }
  for (auto& t : readers) t.join();
  impl_->box.Close();
}

uint32_t TcpTransport::self() const { return impl_->self; }

void TcpTransport::Send(uint32_t to, Frame frame) {
  if (to == impl_->self) throw Error(ErrorCode::kInvalidArgument, "send to self");
  frame.sender = impl_->self;
  auto sock = impl_->Connect(to);
  std::mutex* m;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    m = impl_->send_mu.at(to).get();
  }
  const std::vector<uint8_t> bytes = EncodeAndMeter(impl_->meter, to, frame);
  std::lock_guard<std::mutex> lock(*m);
  boost::system::error_code ec;
  asio::write(*sock, asio::buffer(bytes), ec);
  if (ec) throw Error(ErrorCode::kIo, "send to " + std::to_string(to) + ": " + ec.message());
}

Frame TcpTransport::Receive(uint32_t from, const SessionId& session, std::string_view label,
                            Clock::time_point deadline) {
  return impl_->box.Pop(from, session, label, deadline);
}

}  // namespace cti::net
